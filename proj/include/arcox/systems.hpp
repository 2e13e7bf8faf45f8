#ifndef ARCOX_SYSTEMS_HPP
#define ARCOX_SYSTEMS_HPP

#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace arcox {

enum class Kind { artin, coxeter };

const char* kind_name(Kind k);

// Sentinel for the label "infinity". Finite labels are >= 2, so ordinary
// comparisons (finite < infinite) just work.
inline constexpr int kInfLabel = std::numeric_limits<int>::max();

// A raw label triple as it arrives from input. value may be kInfLabel
// (the "inf" token), which is equivalent to omitting the pair.
struct RawLabel {
  std::string a;
  std::string b;
  int value = kInfLabel;
};

// A generating set with a symmetric label function into {2,3,...} u {inf}.
// Only finite labels are stored; absent pairs read as kInfLabel.
// Immutable after validation.
class ArtinSystem {
 public:
  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<int> index_of(std::string_view name) const;
  Kind kind() const { return kind_; }

  // i != j required; returns kInfLabel for unstored pairs.
  int label(int i, int j) const;

  // Stored (finite-label) pairs, each with i < j, in lexicographic order.
  const std::vector<std::pair<int, int>>& finite_pairs() const {
    return finite_pairs_;
  }

  // L(S,m): the image of the label function over all 2-element subsets.
  // Empty for a single generator; contains kInfLabel iff some pair is absent.
  std::set<int> label_set() const;

  bool right_angled() const;

  // The subsystem on the given generator indices (kept in ambient order),
  // labels restricted. Used for the associated-subgroup systems.
  ArtinSystem restricted_to(const std::vector<int>& subset) const;

  bool operator==(const ArtinSystem&) const = default;

  // Trusted assembly for internally generated systems, whose derived names
  // ('.'/'@') are reserved and would be rejected by validate_system. Keys
  // must have i < j; values must be finite labels >= 2.
  static ArtinSystem assemble(std::vector<std::string> names,
                              const std::map<std::pair<int, int>, int>& labels,
                              Kind kind);

  friend ArtinSystem validate_system(const std::vector<std::string>& generators,
                                     const std::vector<RawLabel>& labels,
                                     Kind kind);

 private:
  std::vector<std::string> names_;
  std::map<std::pair<int, int>, int> labels_;  // keys (i,j) with i < j
  std::vector<std::pair<int, int>> finite_pairs_;
  Kind kind_ = Kind::artin;
};

// Checks and normalizes raw input: deduplicates identical triples,
// symmetrizes, rejects duplicate generator names, labels < 2, self-pairs
// and contradictory values for one pair.
ArtinSystem validate_system(const std::vector<std::string>& generators,
                            const std::vector<RawLabel>& labels, Kind kind);

// Generator names accepted in input documents. Internal constructions use
// '.' and '@' in derived names, so those are reserved here.
bool valid_generator_name(std::string_view name);

// A partial bijection phi : S' -> S'' between subsets of one system's
// generators, preserving labels: m(s,s') = m(phi(s),phi(s')) on S' x S'.
class LabelPreservingBijection {
 public:
  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
  std::vector<int> domain() const;  // S', in system generator order
  std::vector<int> image() const;   // S'', in system generator order
  bool empty() const { return pairs_.empty(); }

  std::optional<int> apply(int s) const;
  std::optional<int> apply_inverse(int s) const;

  bool operator==(const LabelPreservingBijection&) const = default;

  // Skips the label-preservation check (bijectivity is still enforced).
  // Exists so the well-definedness detector can be exercised on inputs
  // that validate_bijection would reject.
  static LabelPreservingBijection unchecked(
      const ArtinSystem& system,
      const std::vector<std::pair<std::string, std::string>>& pairs);

  friend LabelPreservingBijection validate_bijection(
      const ArtinSystem& system,
      const std::vector<std::pair<std::string, std::string>>& pairs);

 private:
  std::vector<std::pair<int, int>> pairs_;  // (source, target), input order
};

// Resolves names, enforces bijectivity and the label condition over all of
// S' x S' (with absent pairs reading as inf). Errors name the violating pair.
LabelPreservingBijection validate_bijection(
    const ArtinSystem& system,
    const std::vector<std::pair<std::string, std::string>>& pairs);

std::string label_to_string(int label);  // "3" or "inf"

}  // namespace arcox

#endif
