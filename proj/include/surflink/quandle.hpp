#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace surflink {

using OpTable = std::vector<std::vector<int>>;

struct AxiomViolation {
  std::string axiom;         // "Q1", "Q2" or "Q3"
  std::vector<int> witness;  // elements exhibiting the failure
};

// First violated quandle axiom, or nullopt when the table is a quandle.
// Throws std::invalid_argument for a non-square table or out-of-range entry.
std::optional<AxiomViolation> check_quandle_axioms(const OpTable& table);

// A finite quandle as a dense table op[a][b] = a*b, with the dual operation
// (the columnwise inverse) precomputed.
class FiniteQuandle {
 public:
  explicit FiniteQuandle(OpTable op);

  int size() const { return static_cast<int>(op_.size()); }
  int op(int a, int b) const { return op_[a][b]; }
  int dual(int a, int b) const { return dual_[a][b]; }
  const OpTable& table() const { return op_; }

  friend bool operator==(const FiniteQuandle& x, const FiniteQuandle& y) { return x.op_ == y.op_; }

 private:
  OpTable op_;
  OpTable dual_;
};

// rho is an involution with rho(a*b) = rho(a)*b and a*rho(b) = a dual b.
bool is_good_involution(const FiniteQuandle& q, const std::vector<int>& rho);

class FiniteSymmetricQuandle {
 public:
  FiniteSymmetricQuandle(FiniteQuandle q, std::vector<int> rho);

  int size() const { return quandle_.size(); }
  const FiniteQuandle& quandle() const { return quandle_; }
  const std::vector<int>& rho() const { return rho_; }
  int op(int a, int b) const { return quandle_.op(a, b); }
  int dual(int a, int b) const { return quandle_.dual(a, b); }
  int bar(int a) const { return rho_[a]; }

 private:
  FiniteQuandle quandle_;
  std::vector<int> rho_;
};

// Z/n with a*b = 2b - a.
FiniteQuandle dihedral(int n);
// a*b = a.
FiniteQuandle trivial_quandle(int n);

std::vector<int> identity_involution(int n);
// a -> a + n/2; n even.
std::vector<int> antipodal_map(int n);
// a -> a + n/2 on even a, fixed on odd a; n divisible by 4.
std::vector<int> half_antipodal_map(int n);
// a -> a + n/2 on odd a, fixed on even a; n divisible by 4.
std::vector<int> half_antipodal_prime_map(int n);

// Connected components under Inn(Q); each sorted, ordered by least element.
std::vector<std::vector<int>> orbits(const FiniteQuandle& q);

inline constexpr int kMaxInvolutionSearch = 16;
inline constexpr int kMaxIsomorphismSearch = 24;

// All good involutions in lexicographic order. GuardExceeded above 16.
std::vector<std::vector<int>> enumerate_good_involutions(const FiniteQuandle& q);

// D(Q) on Q and a barred copy (a -> a, abar -> q + a), rho swapping them.
FiniteSymmetricQuandle double_quandle(const FiniteQuandle& q);

bool is_kei(const FiniteQuandle& q);

// (c, d): c pairs of components swapped by rho, d components fixed by rho.
// nullopt if rho does not carry components onto components.
std::optional<std::pair<int, int>> component_signature(const FiniteSymmetricQuandle& x);

// A bijection f with f(a*b) = f(a)*f(b) and f(rho a) = rho'(f a).
// GuardExceeded above 24 elements.
std::optional<std::vector<int>> symmetric_quandle_isomorphic(const FiniteSymmetricQuandle& x,
                                                             const FiniteSymmetricQuandle& y);

enum class P2Obstruction { obstructed, none, not_applicable };
std::string to_string(P2Obstruction o);

// For a connected X, obstructed iff rho is not the identity. When
// assume_connected is set and X is disconnected, throws std::invalid_argument;
// otherwise a disconnected X yields not_applicable.
P2Obstruction p2_obstruction(const FiniteSymmetricQuandle& x, bool assume_connected);

struct BatteryEntry {
  std::string name;  // e.g. "R4 antipodal"
  int n = 0;
  FiniteSymmetricQuandle target;
};

// Every (R_k, rho) with 1 <= k <= max_k and rho a good involution, ordered by
// k then by the lexicographic order of rho.
std::vector<BatteryEntry> dihedral_battery(int max_k);

// Name of a good involution of R_n: id, antipodal, half-antipodal,
// half-antipodal', or the explicit images.
std::string involution_name(int n, const std::vector<int>& rho);

struct QuandleFile {
  FiniteQuandle quandle;
  std::optional<std::vector<int>> rho;
};

// `size: q`, q rows of the op table, optional `rho: <q integers>`.
QuandleFile parse_quandle_file(std::string_view text);
std::string format_quandle(const FiniteQuandle& q, const std::vector<int>* rho = nullptr);

}  // namespace surflink
