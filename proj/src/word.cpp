#include "arcox/word.hpp"

#include <algorithm>
#include <cstdlib>

#include "arcox/error.hpp"

namespace arcox {

Word::Word(std::vector<Syllable> syllables) : syllables_(std::move(syllables)) {
  for (const Syllable& s : syllables_) {
    require_internal(s.exp == 1 || s.exp == -1, "syllable exponent must be +/-1");
    require_internal(s.gen >= 0, "negative generator index in word");
  }
}

Word Word::generator(int gen, int exp) { return Word({Syllable{gen, exp}}); }

Word Word::power(int gen, int n) {
  Word w;
  int exp = n >= 0 ? 1 : -1;
  for (int i = 0; i < std::abs(n); ++i) w.append(gen, exp);
  return w;
}

Word& Word::append(const Word& other) {
  syllables_.insert(syllables_.end(), other.syllables_.begin(),
                    other.syllables_.end());
  return *this;
}

Word& Word::append(int gen, int exp) {
  require_internal(exp == 1 || exp == -1, "syllable exponent must be +/-1");
  syllables_.push_back(Syllable{gen, exp});
  return *this;
}

Word Word::inverse() const {
  std::vector<Syllable> out;
  out.reserve(syllables_.size());
  for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it)
    out.push_back(Syllable{it->gen, -it->exp});
  return Word(std::move(out));
}

Word Word::freely_reduced() const {
  std::vector<Syllable> out;
  out.reserve(syllables_.size());
  for (const Syllable& s : syllables_) {
    if (!out.empty() && out.back().gen == s.gen && out.back().exp == -s.exp)
      out.pop_back();
    else
      out.push_back(s);
  }
  return Word(std::move(out));
}

Word Word::cyclically_reduced() const {
  Word w = freely_reduced();
  std::size_t lo = 0, hi = w.syllables_.size();
  while (hi - lo >= 2 && w.syllables_[lo].gen == w.syllables_[hi - 1].gen &&
         w.syllables_[lo].exp == -w.syllables_[hi - 1].exp) {
    ++lo;
    --hi;
  }
  return Word(std::vector<Syllable>(w.syllables_.begin() + lo,
                                    w.syllables_.begin() + hi));
}

int Word::exponent_sum(int gen) const {
  int sum = 0;
  for (const Syllable& s : syllables_)
    if (s.gen == gen) sum += s.exp;
  return sum;
}

int Word::max_generator() const {
  int m = -1;
  for (const Syllable& s : syllables_) m = std::max(m, s.gen);
  return m;
}

Word operator*(const Word& a, const Word& b) {
  Word out = a;
  out.append(b);
  return out;
}

Word relator_normal_form(const Word& w) {
  Word core = w.cyclically_reduced();
  std::size_t n = core.size();
  if (n == 0) return core;
  auto less = [](const std::vector<Syllable>& a, const std::vector<Syllable>& b) {
    return std::lexicographical_compare(
        a.begin(), a.end(), b.begin(), b.end(),
        [](const Syllable& x, const Syllable& y) {
          if (x.gen != y.gen) return x.gen < y.gen;
          return x.exp > y.exp;  // +1 sorts before -1
        });
  };
  std::vector<Syllable> best;
  for (const Word& base : {core, core.inverse()}) {
    for (std::size_t r = 0; r < n; ++r) {
      std::vector<Syllable> rotated;
      rotated.reserve(n);
      for (std::size_t i = 0; i < n; ++i)
        rotated.push_back(base[(r + i) % n]);
      if (best.empty() || less(rotated, best)) best = std::move(rotated);
    }
  }
  return Word(std::move(best));
}

std::string word_to_string(const Word& w, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) out += ' ';
    require_internal(w[i].gen < static_cast<int>(names.size()),
                     "word generator out of range for name table");
    out += names[w[i].gen];
    if (w[i].exp < 0) out += "^-1";
  }
  return out;
}

}  // namespace arcox
