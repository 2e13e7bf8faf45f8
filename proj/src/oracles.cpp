#include "arcox/oracles.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "arcox/error.hpp"

namespace arcox {

namespace {

void check_letters(const Word& w, int limit, const char* what) {
  if (w.max_generator() >= limit)
    fail(ErrorCode::invalid_argument,
         std::string(what) + " uses a generator outside the system");
}

Word word_of_letters(const std::vector<int>& letters) {
  Word w;
  for (int g : letters) w.append(g, 1);
  return w;
}

}  // namespace

Word tits_reduce(const ArtinSystem& system, const Word& word,
                 const ReductionBudget& budget) {
  if (system.kind() != Kind::coxeter)
    fail(ErrorCode::invalid_argument,
         "tits reduction applies to coxeter-kind systems");
  check_letters(word, system.size(), "word");
  // Involutions make every letter its own inverse.
  std::vector<int> current;
  current.reserve(word.size());
  for (const auto& syl : word.syllables()) current.push_back(syl.gen);
  if (static_cast<int>(current.size()) > budget.max_length)
    fail(ErrorCode::budget_exhausted, "word exceeds the length budget");

  long long states = 0;
  while (true) {
    // Close the braid-move orbit of `current`; the moment any orbit word
    // allows a deletion, shorten and start over.
    std::set<std::vector<int>> seen;
    std::deque<const std::vector<int>*> queue;
    std::optional<std::vector<int>> shorter;
    auto offer = [&](std::vector<int> w) {
      for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (w[i] == w[i + 1]) {
          w.erase(w.begin() + i, w.begin() + i + 2);
          shorter = std::move(w);
          return true;
        }
      }
      auto [it, inserted] = seen.insert(std::move(w));
      if (inserted) {
        if (++states > budget.max_states)
          fail(ErrorCode::budget_exhausted,
               "braid-move closure exceeds the state budget");
        queue.push_back(&*it);
      }
      return false;
    };

    if (offer(current)) {
      current = std::move(*shorter);
      continue;
    }
    bool restarted = false;
    while (!queue.empty() && !restarted) {
      const std::vector<int>& w = *queue.front();
      queue.pop_front();
      int len = static_cast<int>(w.size());
      for (int p = 0; p + 1 < len && !restarted; ++p) {
        int s = w[p], t = w[p + 1];
        if (s == t) continue;
        int m = system.label(s, t);
        if (m == kInfLabel || p + m > len) continue;
        bool alternating = true;
        for (int idx = 2; idx < m && alternating; ++idx)
          alternating = w[p + idx] == (idx % 2 == 0 ? s : t);
        if (!alternating) continue;
        std::vector<int> flipped = w;
        for (int idx = 0; idx < m; ++idx)
          flipped[p + idx] = idx % 2 == 0 ? t : s;
        if (offer(std::move(flipped))) {
          current = std::move(*shorter);
          restarted = true;
        }
      }
    }
    if (restarted) continue;
    return word_of_letters(*seen.begin());
  }
}

Word raag_normal_form(const ArtinSystem& system, const Word& word) {
  if (system.kind() != Kind::artin || !system.right_angled())
    fail(ErrorCode::invalid_argument,
         "normal form applies to right-angled artin-kind systems");
  check_letters(word, system.size(), "word");
  auto commute = [&](int x, int y) { return x != y && system.label(x, y) == 2; };

  std::vector<Syllable> letters(word.syllables().begin(),
                                word.syllables().end());
  // Cancel x … x^-1 whenever the gap commutes with x.
  bool cancelled = true;
  while (cancelled) {
    cancelled = false;
    for (std::size_t i = 0; i < letters.size() && !cancelled; ++i) {
      for (std::size_t j = i + 1; j < letters.size(); ++j) {
        if (letters[j].gen == letters[i].gen) {
          if (letters[j].exp == -letters[i].exp) {
            letters.erase(letters.begin() + j);
            letters.erase(letters.begin() + i);
            cancelled = true;
          }
          break;  // a same-generator letter blocks anything further
        }
        if (!commute(letters[j].gen, letters[i].gen)) break;
      }
    }
  }
  // Lexicographically least representative of the commutation class:
  // repeatedly extract the least letter whose whole prefix commutes with
  // it. A generator orders before its inverse.
  Word out;
  while (!letters.empty()) {
    std::size_t best = letters.size();
    long long best_key = 0;
    for (std::size_t p = 0; p < letters.size(); ++p) {
      bool movable = true;
      for (std::size_t q = 0; q < p && movable; ++q)
        movable = commute(letters[q].gen, letters[p].gen);
      if (!movable) continue;
      long long key = 2LL * letters[p].gen + (letters[p].exp < 0 ? 1 : 0);
      if (best == letters.size() || key < best_key) {
        best = p;
        best_key = key;
      }
    }
    require_internal(best < letters.size(), "no extractable letter");
    out.append(letters[best].gen, letters[best].exp);
    letters.erase(letters.begin() + best);
  }
  return out;
}

Word canonical_form(const ArtinSystem& system, const Word& word,
                    const ReductionBudget& budget) {
  if (system.kind() == Kind::coxeter) return tits_reduce(system, word, budget);
  if (system.right_angled()) return raag_normal_form(system, word);
  fail(ErrorCode::unsupported,
       "no word-problem oracle for artin-kind systems with labels beyond "
       "{2,inf}");
}

std::optional<Word> express_in_parabolic(const ArtinSystem& system,
                                         const Word& word,
                                         const std::vector<int>& subset,
                                         const ReductionBudget& budget) {
  Word canon = canonical_form(system, word, budget);
  std::set<int> allowed(subset.begin(), subset.end());
  // Support property: the canonical form of a parabolic element only uses
  // the parabolic's letters.
  for (const auto& syl : canon.syllables())
    if (!allowed.count(syl.gen)) return std::nullopt;
  return canon;
}

BrittonForm britton_normal_form(const ArtinSystem& system,
                                const LabelPreservingBijection& phi,
                                const Word& word,
                                const ReductionBudget& budget) {
  int stable = system.size();
  check_letters(word, stable + 1, "word");
  Word reduced = word.freely_reduced();

  BrittonForm form;
  form.segments.emplace_back();
  for (const auto& syl : reduced.syllables()) {
    if (syl.gen == stable) {
      form.exponents.push_back(syl.exp);
      form.segments.emplace_back();
    } else {
      form.segments.back().append(syl.gen, syl.exp);
    }
  }

  const std::vector<int> domain = phi.domain();
  const std::vector<int> image = phi.image();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < form.exponents.size(); ++i) {
      int e1 = form.exponents[i], e2 = form.exponents[i + 1];
      if (e1 == e2) continue;
      bool down = e1 == -1;  // t^-1 g t with g in the domain parabolic
      auto inside = express_in_parabolic(system, form.segments[i + 1],
                                         down ? domain : image, budget);
      if (!inside) continue;
      Word mapped;
      for (const auto& syl : inside->syllables()) {
        auto img = down ? phi.apply(syl.gen) : phi.apply_inverse(syl.gen);
        require_internal(img.has_value(), "parabolic letter outside phi");
        mapped.append(*img, syl.exp);
      }
      form.segments[i] =
          (form.segments[i] * mapped * form.segments[i + 2]).freely_reduced();
      form.segments.erase(form.segments.begin() + i + 1,
                          form.segments.begin() + i + 3);
      form.exponents.erase(form.exponents.begin() + i,
                           form.exponents.begin() + i + 2);
      changed = true;
      break;
    }
  }
  for (auto& seg : form.segments) seg = canonical_form(system, seg, budget);
  return form;
}

int CosetTable::action(int coset, int gen, int exp) const {
  require_internal(coset >= 0 && coset < index() && gen >= 0 && gen < ngens_,
                   "coset action out of range");
  return rows_[coset][2 * gen + (exp < 0 ? 1 : 0)];
}

int CosetTable::trace(int coset, const Word& word) const {
  int c = coset;
  for (const auto& syl : word.syllables()) c = action(c, syl.gen, syl.exp);
  return c;
}

namespace {

// Relator-first (scan and fill) enumeration with coincidence merging.
struct Enumerator {
  int ncols;
  int max_cosets;
  std::vector<std::vector<int>> table;  // -1 = undefined
  std::vector<int> rep;                 // rep[c] < c for dead cosets
  bool changed = false;
  bool overflow = false;

  static int col(const Syllable& syl) {
    return 2 * syl.gen + (syl.exp < 0 ? 1 : 0);
  }
  static int inv(int c) { return c ^ 1; }

  int find(int c) {
    while (rep[c] != c) c = rep[c];
    return c;
  }
  int at(int c, int column) {
    int d = table[c][column];
    return d < 0 ? -1 : find(d);
  }

  int define() {
    if (static_cast<int>(table.size()) >= max_cosets) {
      overflow = true;
      return -1;
    }
    table.emplace_back(ncols, -1);
    rep.push_back(static_cast<int>(table.size()) - 1);
    changed = true;
    return rep.back();
  }

  void link(int a, int column, int b) {
    table[a][column] = b;
    table[b][inv(column)] = a;
    changed = true;
  }

  void merge(int a, int b, std::deque<int>& q) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    rep[b] = a;
    q.push_back(b);
    changed = true;
  }

  void coincidence(int a, int b) {
    std::deque<int> q;
    merge(a, b, q);
    while (!q.empty()) {
      int dead = q.front();
      q.pop_front();
      for (int c = 0; c < ncols; ++c) {
        int d = table[dead][c];
        if (d < 0) continue;
        table[dead][c] = -1;
        if (table[d][inv(c)] == dead) table[d][inv(c)] = -1;
        int mu = find(dead), nu = find(d);
        if (table[mu][c] >= 0)
          merge(nu, table[mu][c], q);
        else if (table[nu][inv(c)] >= 0)
          merge(mu, table[nu][inv(c)], q);
        else
          link(mu, c, nu);
      }
    }
  }

  // Makes f · w[i..j] = b hold by filling, deducing or merging.
  void scan_and_fill(int start, const Word& w) {
    if (w.empty()) return;
    int L = static_cast<int>(w.size());
    int f = find(start), b = f;
    int i = 0, j = L - 1;
    while (true) {
      while (i <= j) {
        int nf = at(f, col(w[i]));
        if (nf < 0) break;
        f = nf;
        ++i;
      }
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i) {
        int nb = at(b, inv(col(w[j])));
        if (nb < 0) break;
        b = nb;
        --j;
      }
      if (j < i) {
        if (f != b) coincidence(f, b);
        return;
      }
      if (j == i) {
        link(f, col(w[i]), b);
        return;
      }
      int fresh = define();
      if (fresh < 0) return;
      link(f, col(w[i]), fresh);
    }
  }

  // Re-point every live entry at a live coset and restore the two-way
  // consistency c·g = d <=> d·g^-1 = c, merging where the table disagrees.
  void normalize() {
    for (std::size_t c = 0; c < table.size(); ++c) {
      if (find(static_cast<int>(c)) != static_cast<int>(c)) continue;
      for (int column = 0; column < ncols; ++column) {
        int d = table[c][column];
        if (d < 0) continue;
        int nd = find(d);
        if (nd != d) {
          table[c][column] = nd;
          changed = true;
        }
        int back = table[nd][inv(column)];
        if (back < 0) {
          table[nd][inv(column)] = static_cast<int>(c);
          changed = true;
        } else if (find(back) != static_cast<int>(c)) {
          coincidence(find(back), static_cast<int>(c));
          return;  // the sweep restarts on the next pass
        }
      }
    }
  }
};

}  // namespace

std::optional<CosetTable> coset_enumerate(const Presentation& presentation,
                                          const std::vector<Word>& subgroup_words,
                                          int max_cosets) {
  if (max_cosets < 1)
    fail(ErrorCode::invalid_argument, "coset limit must be positive");
  int ngens = static_cast<int>(presentation.generators.size());
  for (const auto& r : presentation.relators)
    check_letters(r, ngens, "relator");
  for (const auto& w : subgroup_words) check_letters(w, ngens, "subgroup word");

  Enumerator en;
  en.ncols = 2 * ngens;
  en.max_cosets = max_cosets;
  en.define();  // coset 0 = the subgroup
  while (true) {
    en.changed = false;
    en.normalize();
    for (const auto& w : subgroup_words) {
      en.scan_and_fill(0, w);
      if (en.overflow) return std::nullopt;
    }
    for (int c = 0; c < static_cast<int>(en.table.size()); ++c) {
      if (en.find(c) != c) continue;
      for (const auto& r : presentation.relators) {
        en.scan_and_fill(c, r);
        if (en.overflow) return std::nullopt;
        if (en.find(c) != c) break;
      }
      if (en.find(c) != c) continue;
      for (int column = 0; column < en.ncols; ++column) {
        if (en.table[c][column] >= 0) continue;
        int fresh = en.define();
        if (fresh < 0) return std::nullopt;
        en.link(c, column, fresh);
      }
    }
    if (!en.changed) break;
  }

  // Compact to consecutive numbering in discovery order.
  std::vector<int> renumber(en.table.size(), -1);
  int live = 0;
  for (int c = 0; c < static_cast<int>(en.table.size()); ++c)
    if (en.find(c) == c) renumber[c] = live++;
  CosetTable out;
  out.ngens_ = ngens;
  out.rows_.assign(live, std::vector<int>(en.ncols, -1));
  for (int c = 0; c < static_cast<int>(en.table.size()); ++c) {
    if (renumber[c] < 0) continue;
    for (int column = 0; column < en.ncols; ++column) {
      int d = en.table[c][column];
      require_internal(d >= 0, "closed table has an undefined entry");
      out.rows_[renumber[c]][column] = renumber[en.find(d)];
    }
  }

  // A closed table is only reported after a full check: the columns are
  // mutually inverse permutations, every relator closes everywhere, and
  // every subgroup word fixes coset 0.
  for (int c = 0; c < out.index(); ++c) {
    for (int g = 0; g < ngens; ++g) {
      int d = out.rows_[c][2 * g];
      require_internal(d >= 0 && out.rows_[d][2 * g + 1] == c,
                       "coset table columns are not inverse");
    }
    for (const auto& r : presentation.relators)
      require_internal(out.trace(c, r) == c, "relator does not close");
  }
  for (const auto& w : subgroup_words)
    require_internal(out.trace(0, w) == 0, "subgroup word moves coset 0");
  return out;
}

Distinguish distinguish_in_artin_target(const ArtinSystem& target_system,
                                        const Word& w1, const Word& w2,
                                        const ReductionBudget& budget) {
  if (target_system.kind() != Kind::artin)
    fail(ErrorCode::invalid_argument,
         "the distinguisher applies to artin-kind systems");
  check_letters(w1, target_system.size(), "word");
  check_letters(w2, target_system.size(), "word");

  // Abelianization: an odd label forces its two generators to agree there,
  // so exponent sums are compared per odd-label class.
  int n = target_system.size();
  std::vector<int> root(n);
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](int v) {
    while (root[v] != v) v = root[v] = root[root[v]];
    return v;
  };
  for (const auto& [i, j] : target_system.finite_pairs())
    if (target_system.label(i, j) % 2 == 1) root[std::max(find(i), find(j))] =
        std::min(find(i), find(j));
  auto abelian = [&](const Word& w) {
    std::vector<long long> v(n, 0);
    for (const auto& syl : w.syllables()) v[find(syl.gen)] += syl.exp;
    return v;
  };
  if (abelian(w1) != abelian(w2)) return Distinguish::distinct;

  // Coxeter quotient: same labels, involutions imposed.
  std::map<std::pair<int, int>, int> labels;
  for (const auto& [i, j] : target_system.finite_pairs())
    labels[{i, j}] = target_system.label(i, j);
  ArtinSystem shadow =
      ArtinSystem::assemble(target_system.names(), labels, Kind::coxeter);
  try {
    if (!(tits_reduce(shadow, w1, budget) == tits_reduce(shadow, w2, budget)))
      return Distinguish::distinct;
  } catch (const Error& err) {
    if (err.code() == ErrorCode::budget_exhausted)
      return Distinguish::inconclusive;
    throw;
  }
  return Distinguish::inconclusive;
}

}  // namespace arcox
