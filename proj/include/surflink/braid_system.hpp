#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "surflink/braid.hpp"

namespace surflink {

// The factor b^-1 sigma_1^sign b of a braid system.
struct ConjugateFactor {
  int sign = 1;
  BraidWord conjugator;

  friend bool operator==(const ConjugateFactor&, const ConjugateFactor&) = default;
};

class BraidSystem {
 public:
  BraidSystem() = default;
  explicit BraidSystem(int degree, std::vector<ConjugateFactor> factors = {});

  int degree() const { return degree_; }
  int size() const { return static_cast<int>(factors_.size()); }
  const std::vector<ConjugateFactor>& factors() const { return factors_; }

  void add_factor(int sign, BraidWord conjugator);

  friend bool operator==(const BraidSystem&, const BraidSystem&) = default;

 private:
  int degree_ = 2;
  std::vector<ConjugateFactor> factors_;
};

BraidWord factor_braid(const ConjugateFactor& f);

// Product of all factor braids, in order.
BraidWord boundary_braid(const BraidSystem& sys);

enum class SlideDirection { left, right };

// right: (.., b_i, b_{i+1}, ..) -> (.., b_i b_{i+1} b_i^-1, b_i, ..)
// left:  (.., b_i, b_{i+1}, ..) -> (.., b_{i+1}, b_{i+1}^-1 b_i b_{i+1}, ..)
// `i` is 1-based, 1 <= i <= n-1. New conjugators are freely reduced.
BraidSystem slide(const BraidSystem& sys, int i, SlideDirection dir);

// chi = 2m - n
int euler_characteristic(const BraidSystem& sys);

// g = 2(c+d) - chi
int genus_from(int c, int d, int chi);

AdequacyReport check_weak_boundary(const BraidSystem& sys);
bool check_strict_boundary(const BraidSystem& sys);

// Case-2 system of degree 4: b = (s2^-1)^k, factors (+1, b) and
// (-1, (s2 s1 s3 s2)^-1 b).
BraidSystem case2_system(int k);

// Line-oriented text form:
//   degree: 4
//   factor: +1 ; s2^-1
// `#` starts a comment. Throws ParseError with the line number.
BraidSystem parse_braid_system(std::string_view text);
std::string format_braid_system(const BraidSystem& sys);

// Seed-deterministic random system with conjugators of length <= max_conj_len.
BraidSystem random_braid_system(int degree, int n, int max_conj_len, std::uint64_t seed);

}  // namespace surflink
