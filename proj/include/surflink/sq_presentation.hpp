#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "surflink/braid_system.hpp"
#include "surflink/fsq.hpp"
#include "surflink/quandle.hpp"

namespace surflink {

using Relation = std::pair<FSQElement, FSQElement>;

struct SQPresentation {
  int generators = 0;
  std::vector<Relation> relations;

  friend bool operator==(const SQPresentation&, const SQPresentation&) = default;
};

// Quandle presentation: same element type, bars never set.
struct QPresentation {
  int generators = 0;
  std::vector<Relation> relations;
};

// Throws std::invalid_argument when an index exceeds the generator count
// (or, for a QPresentation, a bar appears).
void validate(const SQPresentation& p);
void validate(const QPresentation& p);

// 2m generators; b_i.x1 = b_i.x2 for each factor, then x_{2j-1} = ~x_{2j}.
SQPresentation plat_symmetric_quandle(const BraidSystem& sys);

// Bound on |X|^generators for exhaustive coloring counts.
inline constexpr double kMaxColoringSpace = 1e10;

// Value of e under the assignment x_g -> f[g-1].
int evaluate(const FSQElement& e, const std::vector<int>& f, const FiniteSymmetricQuandle& x);
int evaluate(const FSQElement& e, const std::vector<int>& f, const FiniteQuandle& q);

std::uint64_t count_colorings(const SQPresentation& p, const FiniteSymmetricQuandle& x);
std::uint64_t count_quandle_colorings(const QPresentation& p, const FiniteQuandle& q);

// Values of b.x_1 .. b.x_m in X under x_j -> f[j-1], by pulling the
// assignment back through the letters instead of expanding b.x_j.
std::vector<int> act_on_coloring(const BraidWord& b, const std::vector<int>& f,
                                 const FiniteSymmetricQuandle& x);

// Same number as count_colorings(plat_symmetric_quandle(sys), x). Only the
// |X|^m choices allowed by the pair relations are visited.
std::uint64_t count_plat_colorings(const BraidSystem& sys, const FiniteSymmetricQuandle& x);

// Appends x_g = ~x_g.
SQPresentation connect_sum_P0(const SQPresentation& p, int g);

// Generators x_1..x_k then ~x_1..~x_k as x_{k+1}..x_{2k}; relations R, the
// barred copies, then for every ordered (x, y) the pairs
// (x^{~y}, x^{y^-1}) and (~x^{~y}, ~x^{y^-1}).
QPresentation to_quandle_presentation(const SQPresentation& p);

// Replaces x_g using a relation x_g = r (either side, possibly barred) with
// r free of x_g, drops that relation and renumbers the generators above g.
SQPresentation eliminate_generator(const SQPresentation& p, int g, int relation_index);

enum class DihedralKind { odd_id, even_id, antipodal_4n2, antipodal_4n, half_4n };

DihedralKind parse_dihedral_kind(std::string_view name);
std::string to_string(DihedralKind kind);

// Two generators x = x1, y = x2; n >= 1.
SQPresentation dihedral_presentation(DihedralKind kind, int n);
// Order of R_k and the involution the presentation is stated for.
int dihedral_target_order(DihedralKind kind, int n);
FiniteSymmetricQuandle dihedral_target(DihedralKind kind, int n);

// R_{2n+1} (odd order) or R_{2n} (even order) as a two-generator quandle
// presentation; order >= 1.
QPresentation dihedral_quandle_presentation(int order);

// `gens: k` then `rel: <elem> = <elem>` lines; `#` starts a comment.
SQPresentation parse_sq_presentation(std::string_view text);
std::string format_sq_presentation(const SQPresentation& p);
std::string format_relation(const Relation& r);

}  // namespace surflink
