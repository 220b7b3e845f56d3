#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "surflink/braid.hpp"
#include "surflink/braid_system.hpp"
#include "surflink/smith.hpp"
#include "surflink/word.hpp"

namespace surflink {

struct GroupPresentation {
  int rank = 0;
  std::vector<Word> relators;
};

// <x_1..x_m | (b.x_i) x_i^-1>
GroupPresentation closed_braid_link_group(const BraidWord& b);

// <x_1..x_2m | (b_i.x_1)(b_i.x_2)^-1, x_{2j-1} x_{2j}>. With
// with_plat_relators = false the x_{2j-1} x_{2j} block is omitted, giving the
// group of the braided surface itself.
GroupPresentation plat_knot_group(const BraidSystem& sys, bool with_plat_relators = true);

// Rows are relators, columns generators.
IntMatrix exponent_sum_matrix(const GroupPresentation& p);

// Exponent sums of plat_knot_group(sys) read off conjugate_labels, so
// long conjugators cost nothing.
IntMatrix plat_exponent_sum_matrix(const BraidSystem& sys, bool with_plat_relators = true);

// Invariant factors of the abelianization: torsion coefficients (> 1) in
// ascending order followed by one 0 per free Z summand.
std::vector<Integer> abelianization(const GroupPresentation& p);
std::vector<Integer> abelianization(const IntMatrix& relation_matrix, int rank);

// (c, d) when the abelian group is Z^c + (Z/2)^d.
std::optional<std::pair<int, int>> classify_H1(const std::vector<Integer>& factors);

// `Z^c + (Z/2)^d + ...`; the trivial group renders as `0`.
std::string render_H1(const std::vector<Integer>& factors);

struct CosetEnumeration {
  bool complete = false;
  std::int64_t order = 0;          // valid when complete
  std::int64_t cosets_defined = 0;
};

// HLT coset enumeration over the trivial subgroup, lookahead off, rows filled
// in coset order. Incomplete when more than `limit` cosets would be defined.
CosetEnumeration todd_coxeter(const GroupPresentation& p, std::int64_t limit);

// An explicit finite group: elements 0..order-1.
class FiniteGroupTable {
 public:
  // Throws std::invalid_argument if any group law fails.
  FiniteGroupTable(std::vector<std::vector<int>> product, int identity);

  int order() const { return static_cast<int>(product_.size()); }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return product_[a][b]; }
  int inv(int a) const { return inverse_[a]; }
  int element_order(int a) const;
  int pow(int a, int e) const;

 private:
  std::vector<std::vector<int>> product_;
  std::vector<int> inverse_;
  int identity_;
};

// Order 8k: elements a^i b^j (i < 4k, j < 2), index i + 4k*j, with
// a^{4k} = 1, b^2 = a^{2k}, b a b^-1 = a^-1.
FiniteGroupTable generalized_quaternion(int k);
// Index of a^i b^j in generalized_quaternion(k).
int quaternion_element(int k, int i, int j);

// Standard presentation <a, b | a^{4k}, b^2 a^{-2k}, b^-1 a b a> (order 8k).
GroupPresentation generalized_quaternion_presentation(int k);
// The relators exactly as displayed with the P^2-link family:
// <a, b | a^{4k}, b^2 a^{-k}, b^-1 a b a>.
GroupPresentation displayed_quaternion_presentation(int k);

inline constexpr std::uint64_t kDefaultHomSearchLimit = 100'000'000;

// Number of homomorphisms into T (assignments of generators satisfying every
// relator). Throws GuardExceeded when order^rank exceeds `limit`.
std::uint64_t count_group_homs(const GroupPresentation& p, const FiniteGroupTable& T,
                               std::uint64_t limit = kDefaultHomSearchLimit);

// `gens: <rank>` followed by `rel: <word>` lines.
GroupPresentation parse_group_presentation(std::string_view text);
std::string format_group_presentation(const GroupPresentation& p);

}  // namespace surflink
