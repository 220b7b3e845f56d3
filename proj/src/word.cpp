#include "surflink/word.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace surflink {

std::vector<Letter> reduce(std::span<const Letter> raw) {
  std::vector<Letter> out;
  out.reserve(raw.size());
  for (Letter l : raw) {
    if (l == 0) throw std::invalid_argument("letter 0 is not a generator");
    if (!out.empty() && out.back() == -l) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

Word::Word(std::initializer_list<Letter> letters)
    : letters_(reduce(std::span<const Letter>(letters.begin(), letters.size()))) {}

Word::Word(std::vector<Letter> letters) : letters_(reduce(letters)) {}

Word Word::generator(int g, int sign) {
  if (g < 1) throw std::invalid_argument("generator index must be positive");
  Word w;
  w.letters_.push_back(sign < 0 ? -g : g);
  return w;
}

int Word::max_generator() const {
  int m = 0;
  for (Letter l : letters_) m = std::max(m, generator_of(l));
  return m;
}

Word Word::inverse() const {
  Word w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(-*it);
  return w;
}

Word Word::pow(int e) const {
  Word base = e < 0 ? inverse() : *this;
  Word out;
  for (int i = 0; i < (e < 0 ? -e : e); ++i) out *= base;
  return out;
}

Word& Word::operator*=(const Word& other) {
  // Cancellation can only happen at the junction.
  std::size_t k = 0;
  while (k < other.letters_.size() && !letters_.empty() && letters_.back() == -other.letters_[k]) {
    letters_.pop_back();
    ++k;
  }
  letters_.insert(letters_.end(), other.letters_.begin() + static_cast<std::ptrdiff_t>(k),
                  other.letters_.end());
  return *this;
}

Word operator*(const Word& a, const Word& b) {
  Word out = a;
  out *= b;
  return out;
}

std::string Word::str(char symbol) const {
  if (letters_.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) s += ' ';
    s += symbol;
    s += std::to_string(generator_of(letters_[i]));
    if (letters_[i] < 0) s += "^-1";
  }
  return s;
}

Word apply_endomorphism(std::span<const Word> images, const Word& w) {
  Word out;
  for (Letter l : w.letters()) {
    const int g = generator_of(l);
    if (g > static_cast<int>(images.size())) {
      throw std::out_of_range("no image for generator x" + std::to_string(g));
    }
    const Word& img = images[g - 1];
    out *= (l > 0 ? img : img.inverse());
  }
  return out;
}

namespace {

// Parses `<symbol><k>` or `<symbol><k>^-1`; returns the signed letter.
Letter parse_token(std::string_view tok, char symbol) {
  if (tok.size() < 2 || tok[0] != symbol) {
    throw std::invalid_argument("bad token '" + std::string(tok) + "'");
  }
  int sign = 1;
  std::string_view body = tok.substr(1);
  if (auto caret = body.find('^'); caret != std::string_view::npos) {
    std::string_view exp = body.substr(caret + 1);
    if (exp == "-1") {
      sign = -1;
    } else if (exp != "1") {
      throw std::invalid_argument("bad exponent in token '" + std::string(tok) + "'");
    }
    body = body.substr(0, caret);
  }
  int g = 0;
  auto [p, ec] = std::from_chars(body.data(), body.data() + body.size(), g);
  if (ec != std::errc() || p != body.data() + body.size() || g < 1) {
    throw std::invalid_argument("bad generator index in token '" + std::string(tok) + "'");
  }
  return sign * g;
}

}  // namespace

Word parse_word(std::string_view text, char symbol) {
  std::istringstream in{std::string(text)};
  std::vector<Letter> letters;
  std::string tok;
  while (in >> tok) {
    if (tok == "1") continue;
    letters.push_back(parse_token(tok, symbol));
  }
  return Word(std::move(letters));
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 1 || v > size() || seen[v - 1]) throw std::invalid_argument("not a permutation");
    seen[v - 1] = true;
  }
}

Permutation Permutation::identity(int m) {
  std::vector<int> v(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) v[j] = j + 1;
  return Permutation(std::move(v));
}

bool Permutation::is_identity() const {
  for (int j = 0; j < size(); ++j)
    if (images_[j] != j + 1) return false;
  return true;
}

bool Permutation::is_transposition() const {
  int moved = 0;
  for (int j = 0; j < size(); ++j) {
    if (images_[j] != j + 1) {
      ++moved;
      if (images_[images_[j] - 1] != j + 1) return false;
    }
  }
  return moved == 2;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int j = 0; j < size(); ++j) inv[images_[j] - 1] = j + 1;
  return Permutation(std::move(inv));
}

Permutation Permutation::then(const Permutation& q) const {
  if (q.size() != size()) throw std::invalid_argument("permutation size mismatch");
  std::vector<int> out(images_.size());
  for (int j = 0; j < size(); ++j) out[j] = q(images_[j]);
  return Permutation(std::move(out));
}

std::string Permutation::str() const {
  std::ostringstream os;
  os << '[';
  for (int j = 0; j < size(); ++j) os << (j ? " " : "") << images_[j];
  os << ']';
  return os.str();
}

}  // namespace surflink
