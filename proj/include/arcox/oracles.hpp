#ifndef ARCOX_ORACLES_HPP
#define ARCOX_ORACLES_HPP

#include <optional>
#include <vector>

#include "arcox/presentations.hpp"
#include "arcox/systems.hpp"
#include "arcox/word.hpp"

namespace arcox {

// Caps for the reduction oracles. Exhausting a cap raises
// ErrorCode::budget_exhausted; callers must treat that as "undecided",
// never as equality or inequality.
struct ReductionBudget {
  long long max_states = 500000;  // distinct words memoized per call
  int max_length = 4096;          // longest word accepted / produced
};

// Tits' solution to the word problem for a Coxeter system: exhaustive
// closure under braid moves (flip an alternating subword of length m(s,t))
// and deletion of adjacent equal letters, iterated to a fixed point.
// Returns the lexicographically least among the reduced words of the
// element; two words are equal in the group iff their canonical forms are
// equal words. Exponents are normalized to +1 on entry.
Word tits_reduce(const ArtinSystem& system, const Word& word,
                 const ReductionBudget& budget = {});

// Normal form in a right-angled Artin group: cancel every x…x^-1 pair
// whose gap commutes with x, then take the lexicographically least word in
// the commutation class (least liftable letter first; a generator orders
// before its inverse). Empty output iff the word is trivial.
Word raag_normal_form(const ArtinSystem& system, const Word& word);

// Canonical form where the word problem is decidable here: coxeter kind
// via tits_reduce, right-angled artin kind via raag_normal_form. Anything
// else raises ErrorCode::unsupported.
Word canonical_form(const ArtinSystem& system, const Word& word,
                    const ReductionBudget& budget = {});

// If the element lies in the standard parabolic subgroup generated by
// `subset`, returns an equivalent word using only those letters (its
// canonical form, which by the support property stays inside the subset);
// otherwise nullopt. Same decidability frontier as canonical_form.
std::optional<Word> express_in_parabolic(const ArtinSystem& system,
                                         const Word& word,
                                         const std::vector<int>& subset,
                                         const ReductionBudget& budget = {});

// Alternating decomposition g0 t^e1 g1 … t^en gn of a word in the
// HNN-extension: segments are words over the base generators, exponents
// are +-1. Pinch-free: no t^-1 g t with g in the parabolic on the domain
// of phi, no t g t^-1 with g in the parabolic on its image. Segments are
// stored in canonical form, so the decomposition represents the identity
// iff trivial().
struct BrittonForm {
  std::vector<Word> segments;
  std::vector<int> exponents;

  bool trivial() const { return exponents.empty() && segments.front().empty(); }
  int syllables() const { return static_cast<int>(exponents.size()); }
};

// Word is over hnn_presentation(system, phi) indices: base generators
// first, the stable letter last. Pinches are rewritten through phi (resp.
// its inverse) until none remain.
BrittonForm britton_normal_form(const ArtinSystem& system,
                                const LabelPreservingBijection& phi,
                                const Word& word,
                                const ReductionBudget& budget = {});

// A completed coset table: every coset has an image under every generator
// and its inverse. Cosets are renumbered consecutively in discovery order,
// with 0 the subgroup itself.
class CosetTable {
 public:
  int index() const { return static_cast<int>(rows_.size()); }
  int num_generators() const { return ngens_; }

  int action(int coset, int gen, int exp) const;
  int trace(int coset, const Word& word) const;

  bool operator==(const CosetTable&) const = default;

 private:
  friend std::optional<CosetTable> coset_enumerate(
      const Presentation& presentation, const std::vector<Word>& subgroup_words,
      int max_cosets);
  int ngens_ = 0;
  std::vector<std::vector<int>> rows_;  // rows_[c][2g] = c·g, [2g+1] = c·g^-1
};

// Coset enumeration (relator-first scan and fill, deterministic coset
// numbering, coincidence merging). Returns the finished table when it
// closes within max_cosets definitions, nullopt on overflow. A returned
// table is re-verified in full — every relator closes at every coset and
// every subgroup word fixes coset 0 — so a finite answer is never wrong.
std::optional<CosetTable> coset_enumerate(const Presentation& presentation,
                                          const std::vector<Word>& subgroup_words,
                                          int max_cosets);

enum class Distinguish { distinct, inconclusive };

// Sound partial inequality test for a (general-label) artin-kind system:
// `distinct` when the two words differ in the abelianization (generators
// joined by an odd label collapse to one coordinate) or in the Coxeter
// quotient; otherwise `inconclusive`. Never claims equality.
Distinguish distinguish_in_artin_target(const ArtinSystem& target_system,
                                        const Word& w1, const Word& w2,
                                        const ReductionBudget& budget = {});

}  // namespace arcox

#endif
