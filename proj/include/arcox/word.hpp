#ifndef ARCOX_WORD_HPP
#define ARCOX_WORD_HPP

#include <cstddef>
#include <compare>
#include <string>
#include <vector>

namespace arcox {

// One letter of a group word: a generator index with exponent +1 or -1.
// Exponents are kept at +/-1 throughout; powers are expanded on construction.
struct Syllable {
  int gen = 0;
  int exp = 1;
  auto operator<=>(const Syllable&) const = default;
};

class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Syllable> syllables);

  static Word generator(int gen, int exp = 1);
  static Word power(int gen, int n);  // gen^n expanded into |n| syllables

  const std::vector<Syllable>& syllables() const { return syllables_; }
  bool empty() const { return syllables_.empty(); }
  std::size_t size() const { return syllables_.size(); }
  const Syllable& operator[](std::size_t i) const { return syllables_[i]; }

  Word& append(const Word& other);
  Word& append(int gen, int exp);
  Word inverse() const;
  Word freely_reduced() const;
  Word cyclically_reduced() const;  // strips conjugating prefix/suffix pairs

  int exponent_sum(int gen) const;
  int max_generator() const;  // -1 for the empty word

  auto operator<=>(const Word&) const = default;
  bool operator==(const Word&) const = default;

 private:
  std::vector<Syllable> syllables_;
};

// Concatenation without reduction.
Word operator*(const Word& a, const Word& b);

// Canonical representative of a relator up to conjugation and inversion:
// the least word, syllable-lexicographically (generator first, then a
// positive exponent before a negative one), over all rotations of the
// cyclic reduction and of its inverse. Two relators impose the same
// relation iff their normal forms coincide.
Word relator_normal_form(const Word& w);

// Renders as space-separated tokens "g" / "g^-1" using the given names.
std::string word_to_string(const Word& w, const std::vector<std::string>& names);

}  // namespace arcox

#endif
