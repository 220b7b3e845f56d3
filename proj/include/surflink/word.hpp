#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace surflink {

// A letter is a nonzero signed generator index: +g is x_g, -g is x_g^-1.
// Generators are 1-based.
using Letter = int;

inline constexpr int generator_of(Letter l) { return l < 0 ? -l : l; }
inline constexpr int sign_of(Letter l) { return l < 0 ? -1 : 1; }

// Element of a free group, always stored freely reduced so that equality
// of group elements is equality of letter sequences.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters);
  explicit Word(std::vector<Letter> letters);

  static Word generator(int g, int sign = 1);

  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  // Largest generator index occurring, 0 for the empty word.
  int max_generator() const;

  Word inverse() const;
  Word pow(int e) const;

  friend Word operator*(const Word& a, const Word& b);
  Word& operator*=(const Word& other);

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

  // `x1 x2^-1 x1`; the empty word renders as `1`.
  std::string str(char symbol = 'x') const;

 private:
  std::vector<Letter> letters_;
};

// Free reduction of an arbitrary letter sequence.
std::vector<Letter> reduce(std::span<const Letter> raw);

inline Word multiply(const Word& a, const Word& b) { return a * b; }
inline Word invert(const Word& w) { return w.inverse(); }

// Substitutes images[g-1] for x_g. Throws std::out_of_range naming the
// generator when w uses a generator without an image.
Word apply_endomorphism(std::span<const Word> images, const Word& w);

// Parses `x1 x2^-1 x3` (or `1` for the empty word). `symbol` selects the
// generator prefix.
Word parse_word(std::string_view text, char symbol = 'x');

// Images of {1..m} as 1-based values; images[j-1] is the image of j.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int m);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int j) const { return images_[j - 1]; }
  std::span<const int> images() const { return images_; }

  bool is_identity() const;
  bool is_transposition() const;
  Permutation inverse() const;

  // (p.then(q))(j) = q(p(j))
  Permutation then(const Permutation& q) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

  std::string str() const;

 private:
  std::vector<int> images_;
};

}  // namespace surflink
