#include "arcox/systems.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "arcox/error.hpp"

namespace arcox {

const char* kind_name(Kind k) { return k == Kind::artin ? "artin" : "coxeter"; }

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::parse: return "parse";
    case ErrorCode::validate: return "validate";
    case ErrorCode::invalid_argument: return "invalid-argument";
    case ErrorCode::label_conflict: return "label-conflict";
    case ErrorCode::budget_exhausted: return "budget-exhausted";
    case ErrorCode::unsupported: return "unsupported";
    case ErrorCode::check_failed: return "check-failed";
    case ErrorCode::internal: return "internal";
  }
  return "unknown";
}

std::string label_to_string(int label) {
  return label == kInfLabel ? "inf" : std::to_string(label);
}

std::optional<int> ArtinSystem::index_of(std::string_view name) const {
  for (int i = 0; i < size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

int ArtinSystem::label(int i, int j) const {
  require_internal(i != j, "label of a self-pair requested");
  require_internal(i >= 0 && j >= 0 && i < size() && j < size(),
                   "label index out of range");
  auto key = std::minmax(i, j);
  auto it = labels_.find({key.first, key.second});
  return it == labels_.end() ? kInfLabel : it->second;
}

std::set<int> ArtinSystem::label_set() const {
  std::set<int> out;
  int n = size();
  for (const auto& [pair, value] : labels_) out.insert(value);
  // Any pair absent from storage means some {s,t} has label inf.
  std::size_t total_pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
  if (labels_.size() < total_pairs) out.insert(kInfLabel);
  return out;
}

bool ArtinSystem::right_angled() const {
  for (const auto& [pair, value] : labels_)
    if (value != 2) return false;
  return true;
}

ArtinSystem ArtinSystem::restricted_to(const std::vector<int>& subset) const {
  ArtinSystem out;
  out.kind_ = kind_;
  std::vector<int> pos(size(), -1);
  for (std::size_t i = 0; i < subset.size(); ++i) {
    int s = subset[i];
    require_internal(s >= 0 && s < size(), "restriction index out of range");
    require_internal(pos[s] == -1, "duplicate index in restriction");
    pos[s] = static_cast<int>(i);
    out.names_.push_back(names_[s]);
  }
  for (const auto& [pair, value] : labels_) {
    int a = pos[pair.first], b = pos[pair.second];
    if (a >= 0 && b >= 0) {
      auto key = std::minmax(a, b);
      out.labels_[{key.first, key.second}] = value;
    }
  }
  for (const auto& [pair, value] : out.labels_) out.finite_pairs_.push_back(pair);
  return out;
}

ArtinSystem ArtinSystem::assemble(
    std::vector<std::string> names,
    const std::map<std::pair<int, int>, int>& labels, Kind kind) {
  ArtinSystem out;
  out.kind_ = kind;
  int n = static_cast<int>(names.size());
  {
    std::set<std::string> distinct(names.begin(), names.end());
    require_internal(static_cast<int>(distinct.size()) == n,
                     "assembled system repeats a generator name");
  }
  out.names_ = std::move(names);
  for (const auto& [pair, value] : labels) {
    require_internal(0 <= pair.first && pair.first < pair.second &&
                         pair.second < n,
                     "assembled label pair out of order or range");
    require_internal(value >= 2 && value != kInfLabel,
                     "assembled label must be finite and >= 2");
    out.labels_.emplace(pair, value);
    out.finite_pairs_.push_back(pair);
  }
  return out;
}

bool valid_generator_name(std::string_view name) {
  if (name.empty()) return false;
  for (char c : name) {
    bool ok = std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
              c == '-' || c == '\'';
    if (!ok) return false;
  }
  return true;
}

ArtinSystem validate_system(const std::vector<std::string>& generators,
                            const std::vector<RawLabel>& labels, Kind kind) {
  ArtinSystem sys;
  sys.kind_ = kind;
  for (const std::string& name : generators) {
    if (!valid_generator_name(name))
      fail(ErrorCode::validate, "invalid generator name '" + name + "'");
    if (sys.index_of(name))
      fail(ErrorCode::validate, "duplicate generator name '" + name + "'");
    sys.names_.push_back(name);
  }
  for (const RawLabel& raw : labels) {
    auto a = sys.index_of(raw.a);
    auto b = sys.index_of(raw.b);
    if (!a) fail(ErrorCode::validate, "label names unknown generator '" + raw.a + "'");
    if (!b) fail(ErrorCode::validate, "label names unknown generator '" + raw.b + "'");
    if (*a == *b)
      fail(ErrorCode::validate, "label on self-pair (" + raw.a + "," + raw.b + ")");
    if (raw.value != kInfLabel && raw.value < 2)
      fail(ErrorCode::validate,
           "label " + std::to_string(raw.value) + " on (" + raw.a + "," + raw.b +
               ") is below 2");
    auto key = std::minmax(*a, *b);
    auto it = sys.labels_.find({key.first, key.second});
    if (it != sys.labels_.end()) {
      if (it->second != raw.value)
        fail(ErrorCode::validate,
             "contradictory labels for pair (" + raw.a + "," + raw.b + "): " +
                 label_to_string(it->second) + " vs " + label_to_string(raw.value));
      continue;  // identical duplicate
    }
    if (raw.value == kInfLabel) {
      // Explicit inf is the same as absence, but it must still be checked
      // against finite duplicates; remember it with a sentinel entry.
      sys.labels_[{key.first, key.second}] = kInfLabel;
    } else {
      sys.labels_[{key.first, key.second}] = raw.value;
    }
  }
  // Drop the explicit-inf sentinels: absence is the canonical representation.
  for (auto it = sys.labels_.begin(); it != sys.labels_.end();) {
    if (it->second == kInfLabel)
      it = sys.labels_.erase(it);
    else
      ++it;
  }
  for (const auto& [pair, value] : sys.labels_) sys.finite_pairs_.push_back(pair);
  return sys;
}

std::vector<int> LabelPreservingBijection::domain() const {
  std::vector<int> out;
  for (const auto& [s, t] : pairs_) out.push_back(s);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> LabelPreservingBijection::image() const {
  std::vector<int> out;
  for (const auto& [s, t] : pairs_) out.push_back(t);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<int> LabelPreservingBijection::apply(int s) const {
  for (const auto& [a, b] : pairs_)
    if (a == s) return b;
  return std::nullopt;
}

std::optional<int> LabelPreservingBijection::apply_inverse(int s) const {
  for (const auto& [a, b] : pairs_)
    if (b == s) return a;
  return std::nullopt;
}

LabelPreservingBijection LabelPreservingBijection::unchecked(
    const ArtinSystem& system,
    const std::vector<std::pair<std::string, std::string>>& pairs) {
  LabelPreservingBijection phi;
  std::vector<bool> used_source(system.size(), false);
  std::vector<bool> used_target(system.size(), false);
  for (const auto& [src, dst] : pairs) {
    auto s = system.index_of(src);
    auto t = system.index_of(dst);
    if (!s) fail(ErrorCode::validate, "phi source '" + src + "' is not a generator");
    if (!t) fail(ErrorCode::validate, "phi target '" + dst + "' is not a generator");
    if (used_source[*s])
      fail(ErrorCode::validate, "phi repeats source '" + src + "'");
    if (used_target[*t])
      fail(ErrorCode::validate, "phi repeats target '" + dst + "'");
    used_source[*s] = true;
    used_target[*t] = true;
    phi.pairs_.emplace_back(*s, *t);
  }
  return phi;
}

LabelPreservingBijection validate_bijection(
    const ArtinSystem& system,
    const std::vector<std::pair<std::string, std::string>>& pairs) {
  LabelPreservingBijection phi = LabelPreservingBijection::unchecked(system, pairs);
  for (const auto& [s1, t1] : phi.pairs()) {
    for (const auto& [s2, t2] : phi.pairs()) {
      if (s1 >= s2) continue;
      int source_label = system.label(s1, s2);
      int target_label = system.label(t1, t2);
      if (source_label != target_label) {
        std::ostringstream msg;
        msg << "phi does not preserve labels: m(" << system.name(s1) << ","
            << system.name(s2) << ") = " << label_to_string(source_label)
            << " but m(" << system.name(t1) << "," << system.name(t2)
            << ") = " << label_to_string(target_label);
        fail(ErrorCode::validate, msg.str());
      }
    }
  }
  return phi;
}

}  // namespace arcox
