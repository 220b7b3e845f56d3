#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "surflink/word.hpp"

namespace surflink {

// A word in Artin's generators of B_degree. Letters are +i for sigma_i and
// -i for sigma_i^-1, with 1 <= i <= degree-1. Words are kept literally as
// written; free_reduced() cancels adjacent inverse pairs.
class BraidWord {
 public:
  BraidWord() = default;
  explicit BraidWord(int degree, std::vector<int> letters = {});

  int degree() const { return degree_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  BraidWord inverse() const;
  BraidWord free_reduced() const;
  BraidWord pow(int e) const;

  // Literal concatenation; degrees must agree.
  friend BraidWord operator*(const BraidWord& a, const BraidWord& b);
  BraidWord& operator*=(const BraidWord& other);

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

  // `s2^-1 s1 s3^-1`; the empty braid renders as `e`.
  std::string str() const;

 private:
  int degree_ = 1;
  std::vector<int> letters_;
};

BraidWord parse_braid(std::string_view text, int degree);

// Upper bound on intermediate word length in the Artin action; exceeding it
// throws GuardExceeded.
inline constexpr std::size_t kMaxActionWordLength = std::size_t{1} << 22;

// b . w with sigma_i: x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i, and
// (b1 b2) . w = b2 . (b1 . w).
Word artin_action(const BraidWord& b, const Word& w);

// Images b . x_j for j = 1..degree.
std::vector<Word> artin_images(const BraidWord& b);

// Start from the identity array and swap entries i, i+1 for each letter, in
// word order. For sigma_1 sigma_2 this gives 1->2, 2->3, 3->1.
Permutation underlying_permutation(const BraidWord& b);

// b.x_j is a conjugate of x_{labels[j-1]}; no words are built.
std::vector<int> conjugate_labels(const BraidWord& b);

// Equality in B_m, decided by comparing Artin actions (the action is
// faithful). Throws std::invalid_argument on degree mismatch.
bool braids_equal(const BraidWord& a, const BraidWord& b);

// Generators of the Hilden subgroup K_{2m}.
std::vector<BraidWord> hilden_generators(int m);

struct PairingCheck {
  bool pass = true;
  // On failure: the pair {2j-1, 2j} (as j) and where its endpoints land.
  int pair = 0;
  std::pair<int, int> image{0, 0};
};

struct KernelCheck {
  bool pass = true;
  int failing_pair = 0;  // j with x_{2j-1} x_{2j} not killed
};

// Endpoint pairs {2j-1, 2j} must be carried onto endpoint pairs.
PairingCheck pairing_permutation_check(const BraidWord& b);

// The action must preserve the kernel of F_{2m} -> F_m, x_{2j-1} -> y_j,
// x_{2j} -> y_j^-1.
KernelCheck plat_kernel_check(const BraidWord& b);

enum class Verdict { rejected, not_rejected };

struct AdequacyReport {
  PairingCheck pairing;
  KernelCheck kernel;
  Verdict verdict = Verdict::not_rejected;
};

// Necessary conditions for membership in K_{2m}. "not_rejected" is not a
// membership proof.
AdequacyReport adequacy_check(const BraidWord& b);

std::string to_string(Verdict v);

// Product of `length` uniformly chosen Hilden generators or inverses.
BraidWord random_hilden_element(int m, int length, std::uint64_t seed);

}  // namespace surflink
