#include "surflink/braid.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

#include "surflink/errors.hpp"

namespace surflink {

BraidWord::BraidWord(int degree, std::vector<int> letters)
    : degree_(degree), letters_(std::move(letters)) {
  if (degree < 1) throw std::invalid_argument("braid degree must be positive");
  for (int l : letters_) {
    const int i = l < 0 ? -l : l;
    if (i < 1 || i > degree - 1) {
      throw std::invalid_argument("braid letter s" + std::to_string(i) + " outside B_" +
                                  std::to_string(degree));
    }
  }
}

BraidWord BraidWord::inverse() const {
  std::vector<int> out(letters_.rbegin(), letters_.rend());
  for (int& l : out) l = -l;
  return BraidWord(degree_, std::move(out));
}

BraidWord BraidWord::free_reduced() const { return BraidWord(degree_, reduce(letters_)); }

BraidWord BraidWord::pow(int e) const {
  const BraidWord base = e < 0 ? inverse() : *this;
  BraidWord out(degree_);
  for (int i = 0; i < (e < 0 ? -e : e); ++i) out *= base;
  return out;
}

BraidWord& BraidWord::operator*=(const BraidWord& other) {
  if (other.degree_ != degree_) throw std::invalid_argument("braid degree mismatch");
  letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
  return *this;
}

BraidWord operator*(const BraidWord& a, const BraidWord& b) {
  BraidWord out = a;
  out *= b;
  return out;
}

std::string BraidWord::str() const {
  if (letters_.empty()) return "e";
  std::string s;
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    if (k) s += ' ';
    s += 's' + std::to_string(letters_[k] < 0 ? -letters_[k] : letters_[k]);
    if (letters_[k] < 0) s += "^-1";
  }
  return s;
}

BraidWord parse_braid(std::string_view text, int degree) {
  std::istringstream in{std::string(text)};
  std::string tok;
  std::vector<int> letters;
  bool saw_e = false;
  while (in >> tok) {
    if (tok == "e") {
      saw_e = true;
      continue;
    }
    const Word w = parse_word(tok, 's');
    if (w.size() != 1) throw std::invalid_argument("bad braid token '" + tok + "'");
    letters.push_back(w[0]);
  }
  if (saw_e && !letters.empty()) throw std::invalid_argument("'e' must stand alone");
  return BraidWord(degree, std::move(letters));
}

namespace {

void push_reduced(std::vector<Letter>& out, Letter l) {
  if (!out.empty() && out.back() == -l) {
    out.pop_back();
  } else {
    out.push_back(l);
  }
}

// One Artin letter applied as a substitution to a reduced letter sequence.
std::vector<Letter> act_letter(int letter, const std::vector<Letter>& w) {
  const int i = letter < 0 ? -letter : letter;
  const int j = i + 1;
  std::vector<Letter> out;
  out.reserve(w.size() + 8);
  for (Letter l : w) {
    const int g = generator_of(l);
    if (g != i && g != j) {
      push_reduced(out, l);
      continue;
    }
    // image of x_g (positive), then inverted when l < 0
    Letter img[3];
    int n = 0;
    if (letter > 0) {
      if (g == i) {
        img[0] = i; img[1] = j; img[2] = -i; n = 3;
      } else {
        img[0] = i; n = 1;
      }
    } else {
      if (g == i) {
        img[0] = j; n = 1;
      } else {
        img[0] = -j; img[1] = i; img[2] = j; n = 3;
      }
    }
    if (l > 0) {
      for (int k = 0; k < n; ++k) push_reduced(out, img[k]);
    } else {
      for (int k = n - 1; k >= 0; --k) push_reduced(out, -img[k]);
    }
  }
  if (out.size() > kMaxActionWordLength) {
    throw GuardExceeded("Artin action word length exceeds " +
                        std::to_string(kMaxActionWordLength));
  }
  return out;
}

}  // namespace

Word artin_action(const BraidWord& b, const Word& w) {
  if (w.max_generator() > b.degree()) {
    throw std::invalid_argument("word uses x" + std::to_string(w.max_generator()) +
                                " beyond braid degree " + std::to_string(b.degree()));
  }
  std::vector<Letter> cur(w.letters().begin(), w.letters().end());
  for (int letter : b.letters()) cur = act_letter(letter, cur);
  return Word(std::move(cur));
}

std::vector<Word> artin_images(const BraidWord& b) {
  std::vector<Word> out;
  out.reserve(static_cast<std::size_t>(b.degree()));
  for (int j = 1; j <= b.degree(); ++j) out.push_back(artin_action(b, Word::generator(j)));
  return out;
}

Permutation underlying_permutation(const BraidWord& b) {
  std::vector<int> a(static_cast<std::size_t>(b.degree()));
  for (int j = 0; j < b.degree(); ++j) a[j] = j + 1;
  for (int l : b.letters()) {
    const int i = l < 0 ? -l : l;
    std::swap(a[i - 1], a[i]);
  }
  return Permutation(std::move(a));
}

std::vector<int> conjugate_labels(const BraidWord& b) {
  std::vector<int> lab(static_cast<std::size_t>(b.degree()));
  for (int j = 0; j < b.degree(); ++j) lab[j] = j + 1;
  for (auto it = b.letters().rbegin(); it != b.letters().rend(); ++it) {
    const int i = *it < 0 ? -*it : *it;
    std::swap(lab[i - 1], lab[i]);
  }
  return lab;
}

bool braids_equal(const BraidWord& a, const BraidWord& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("braid degree mismatch");
  // a = b iff a b^-1 acts trivially; free cancellation first.
  const BraidWord c = (a * b.inverse()).free_reduced();
  if (c.empty()) return true;
  if (!underlying_permutation(c).is_identity()) return false;
  for (int j = 1; j <= c.degree(); ++j) {
    const Word x = Word::generator(j);
    if (artin_action(c, x) != x) return false;
  }
  return true;
}

std::vector<BraidWord> hilden_generators(int m) {
  if (m < 1) throw std::invalid_argument("hilden_generators needs m >= 1");
  const int deg = 2 * m;
  std::vector<BraidWord> gens;
  gens.emplace_back(deg, std::vector<int>{1});
  if (m >= 2) gens.emplace_back(deg, std::vector<int>{2, 1, 3, 2});
  for (int k = 1; k <= m - 1; ++k) {
    gens.emplace_back(deg, std::vector<int>{2 * k, 2 * k - 1, -(2 * k + 1), -(2 * k)});
  }
  return gens;
}

namespace {

void require_even(const BraidWord& b) {
  if (b.degree() % 2 != 0) {
    throw std::invalid_argument("expected an even-degree braid, got degree " +
                                std::to_string(b.degree()));
  }
}

}  // namespace

PairingCheck pairing_permutation_check(const BraidWord& b) {
  require_even(b);
  const Permutation p = underlying_permutation(b);
  for (int j = 1; 2 * j <= b.degree(); ++j) {
    int u = p(2 * j - 1), v = p(2 * j);
    if (u > v) std::swap(u, v);
    if (!(u % 2 == 1 && v == u + 1)) return PairingCheck{false, j, {u, v}};
  }
  return {};
}

KernelCheck plat_kernel_check(const BraidWord& b) {
  require_even(b);
  const int m = b.degree() / 2;
  // x_{2j-1} -> y_j, x_{2j} -> y_j^-1
  std::vector<Word> quotient;
  quotient.reserve(static_cast<std::size_t>(2 * m));
  for (int j = 1; j <= m; ++j) {
    quotient.push_back(Word::generator(j));
    quotient.push_back(Word::generator(j, -1));
  }
  const std::vector<Word> images = artin_images(b);
  for (int j = 1; j <= m; ++j) {
    const Word pair_image = images[2 * j - 2] * images[2 * j - 1];
    if (!apply_endomorphism(quotient, pair_image).empty()) return KernelCheck{false, j};
  }
  return {};
}

AdequacyReport adequacy_check(const BraidWord& b) {
  AdequacyReport r;
  r.pairing = pairing_permutation_check(b);
  r.kernel = plat_kernel_check(b);
  r.verdict = (r.pairing.pass && r.kernel.pass) ? Verdict::not_rejected : Verdict::rejected;
  return r;
}

std::string to_string(Verdict v) { return v == Verdict::rejected ? "rejected" : "not-rejected"; }

BraidWord random_hilden_element(int m, int length, std::uint64_t seed) {
  if (length < 0) throw std::invalid_argument("length must be non-negative");
  const auto gens = hilden_generators(m);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, 2 * gens.size() - 1);
  BraidWord out(2 * m);
  for (int k = 0; k < length; ++k) {
    const std::size_t c = pick(rng);
    out *= (c % 2 == 0) ? gens[c / 2] : gens[c / 2].inverse();
  }
  return out;
}

}  // namespace surflink
