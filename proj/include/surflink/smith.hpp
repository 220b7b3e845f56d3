#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace surflink {

using Integer = boost::multiprecision::cpp_int;
using IntMatrix = std::vector<std::vector<Integer>>;

struct SmithForm {
  IntMatrix D;  // diagonal, d_1 | d_2 | ..., non-negative
  IntMatrix U;  // rows x rows, unimodular
  IntMatrix V;  // cols x cols, unimodular
};

// D = U * M * V. `cols` disambiguates the shape of an empty matrix.
SmithForm smith_normal_form(const IntMatrix& M, std::size_t cols);
SmithForm smith_normal_form(const IntMatrix& M);

IntMatrix identity_matrix(std::size_t n);
IntMatrix matmul(const IntMatrix& A, const IntMatrix& B, std::size_t inner, std::size_t cols);
// Bareiss fraction-free determinant.
Integer determinant(IntMatrix A);

}  // namespace surflink
