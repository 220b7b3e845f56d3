#include "surflink/smith.hpp"

#include <stdexcept>
#include <utility>

namespace surflink {

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix I(n, std::vector<Integer>(n, 0));
  for (std::size_t i = 0; i < n; ++i) I[i][i] = 1;
  return I;
}

IntMatrix matmul(const IntMatrix& A, const IntMatrix& B, std::size_t inner, std::size_t cols) {
  IntMatrix C(A.size(), std::vector<Integer>(cols, 0));
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (A[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) C[i][j] += A[i][k] * B[k][j];
    }
  return C;
}

Integer determinant(IntMatrix A) {
  const std::size_t n = A.size();
  if (n == 0) return 1;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (A[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && A[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(A[k], A[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) / prev;
    prev = A[k][k];
  }
  return sign * A[n - 1][n - 1];
}

namespace {

class Reducer {
 public:
  Reducer(const IntMatrix& M, std::size_t cols)
      : rows_(M.size()), cols_(cols), A_(M), U_(identity_matrix(rows_)), V_(identity_matrix(cols_)) {
    for (const auto& row : A_)
      if (row.size() != cols_) throw std::invalid_argument("ragged matrix");
  }

  SmithForm run() {
    const std::size_t n = std::min(rows_, cols_);
    for (std::size_t t = 0; t < n; ++t) {
      if (!move_min_to(t)) break;
      for (;;) {
        clear_column(t);
        clear_row(t);
        if (!column_clear(t) || !row_clear(t)) continue;
        // Enforce divisibility of the remaining block by the pivot.
        bool fixed = false;
        for (std::size_t i = t + 1; i < rows_ && !fixed; ++i)
          for (std::size_t j = t + 1; j < cols_; ++j)
            if (A_[i][j] % A_[t][t] != 0) {
              add_row(t, i, 1);
              fixed = true;
              break;
            }
        if (!fixed) break;
      }
      if (A_[t][t] < 0) negate_row(t);
    }
    return {std::move(A_), std::move(U_), std::move(V_)};
  }

 private:
  // Moves a nonzero entry of least magnitude in the block [t.., t..] to (t,t).
  bool move_min_to(std::size_t t) {
    std::size_t bi = rows_, bj = cols_;
    for (std::size_t i = t; i < rows_; ++i)
      for (std::size_t j = t; j < cols_; ++j)
        if (A_[i][j] != 0 && (bi == rows_ || abs(A_[i][j]) < abs(A_[bi][bj]))) {
          bi = i;
          bj = j;
        }
    if (bi == rows_) return false;
    swap_rows(t, bi);
    swap_cols(t, bj);
    return true;
  }

  void clear_column(std::size_t t) {
    for (;;) {
      bool moved = false;
      for (std::size_t i = t + 1; i < rows_; ++i) {
        if (A_[i][t] == 0) continue;
        const Integer q = A_[i][t] / A_[t][t];
        add_row(i, t, -q);
        if (A_[i][t] != 0) {
          // remainder smaller than pivot: make it the pivot
          swap_rows(t, i);
          moved = true;
        }
      }
      if (!moved) return;
    }
  }

  void clear_row(std::size_t t) {
    for (;;) {
      bool moved = false;
      for (std::size_t j = t + 1; j < cols_; ++j) {
        if (A_[t][j] == 0) continue;
        const Integer q = A_[t][j] / A_[t][t];
        add_col(j, t, -q);
        if (A_[t][j] != 0) {
          swap_cols(t, j);
          moved = true;
        }
      }
      if (!moved) return;
    }
  }

  bool column_clear(std::size_t t) const {
    for (std::size_t i = t + 1; i < rows_; ++i)
      if (A_[i][t] != 0) return false;
    return true;
  }
  bool row_clear(std::size_t t) const {
    for (std::size_t j = t + 1; j < cols_; ++j)
      if (A_[t][j] != 0) return false;
    return true;
  }

  // row_dst += q * row_src
  void add_row(std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t j = 0; j < cols_; ++j) A_[dst][j] += q * A_[src][j];
    for (std::size_t j = 0; j < rows_; ++j) U_[dst][j] += q * U_[src][j];
  }
  // col_dst += q * col_src
  void add_col(std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t i = 0; i < rows_; ++i) A_[i][dst] += q * A_[i][src];
    for (std::size_t i = 0; i < cols_; ++i) V_[i][dst] += q * V_[i][src];
  }
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap(A_[a], A_[b]);
    std::swap(U_[a], U_[b]);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (auto& row : A_) std::swap(row[a], row[b]);
    for (auto& row : V_) std::swap(row[a], row[b]);
  }
  void negate_row(std::size_t t) {
    for (auto& x : A_[t]) x = -x;
    for (auto& x : U_[t]) x = -x;
  }

  std::size_t rows_, cols_;
  IntMatrix A_, U_, V_;
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& M, std::size_t cols) { return Reducer(M, cols).run(); }

SmithForm smith_normal_form(const IntMatrix& M) {
  return smith_normal_form(M, M.empty() ? 0 : M.front().size());
}

}  // namespace surflink
