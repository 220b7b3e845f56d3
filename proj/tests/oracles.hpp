#pragma once

// Independent reference computations used by the tests. Nothing here calls
// the search or normal-form code under test.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "surflink/quandle.hpp"

namespace oracle {

// Free reduction with an explicit stack.
inline std::vector<int> stack_reduce(const std::vector<int>& raw) {
  std::vector<int> st;
  for (int l : raw) {
    if (!st.empty() && st.back() == -l) {
      st.pop_back();
    } else {
      st.push_back(l);
    }
  }
  return st;
}

inline std::vector<int> random_letters(std::mt19937_64& rng, int rank, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), gen(1, rank), sgn(0, 1);
  std::vector<int> w(static_cast<std::size_t>(len(rng)));
  for (int& l : w) l = gen(rng) * (sgn(rng) ? 1 : -1);
  return w;
}

// Maps f: src -> dst with f(a*b) = f(a)*f(b) and f(rho a) = rho'(f a),
// assigned element by element; each constraint is tested as soon as all
// of its elements have images.
inline std::uint64_t count_sq_homs(const std::vector<std::vector<int>>& sop, const std::vector<int>& srho,
                                   const std::vector<std::vector<int>>& dop, const std::vector<int>& drho) {
  const int n = static_cast<int>(sop.size());
  const int m = static_cast<int>(dop.size());
  std::vector<int> f(static_cast<std::size_t>(n), -1);
  std::uint64_t count = 0;
  // constraints whose largest element is a
  auto consistent = [&](int a) {
    for (int b = 0; b <= a; ++b) {
      for (int c = 0; c <= a; ++c) {
        const int bc = sop[b][c];
        if (bc > a || std::max({b, c, bc}) != a) continue;
        if (f[bc] != dop[f[b]][f[c]]) return false;
      }
      const int rb = srho[b];
      if (rb <= a && std::max(b, rb) == a && f[rb] != drho[f[b]]) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, int a) -> void {
    if (a == n) {
      ++count;
      return;
    }
    for (int v = 0; v < m; ++v) {
      f[a] = v;
      if (consistent(a)) self(self, a + 1);
    }
    f[a] = -1;
  };
  rec(rec, 0);
  return count;
}

inline std::uint64_t count_sq_homs(const surflink::FiniteSymmetricQuandle& x,
                                   const surflink::FiniteSymmetricQuandle& y) {
  return count_sq_homs(x.quandle().table(), x.rho(), y.quandle().table(), y.rho());
}

inline std::uint64_t count_quandle_homs(const surflink::FiniteQuandle& x, const surflink::FiniteQuandle& y) {
  std::vector<int> id_x(static_cast<std::size_t>(x.size())), id_y(static_cast<std::size_t>(y.size()));
  std::iota(id_x.begin(), id_x.end(), 0);
  std::iota(id_y.begin(), id_y.end(), 0);
  return count_sq_homs(x.table(), id_x, y.table(), id_y);
}

// Determinant by cofactor-free Gaussian elimination over __int128 with
// exact division (Bareiss), kept separate from the library version.
inline __int128 det128(std::vector<std::vector<__int128>> a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return 1;
  __int128 prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

inline __int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Invariant factors (including zeros, length min(rows, cols)) from
// determinantal divisors: d_k = gcd of all k x k minors, s_k = d_k / d_{k-1}.
inline std::vector<long long> invariant_factors(const std::vector<std::vector<long long>>& M, int cols) {
  const int rows = static_cast<int>(M.size());
  const int r = std::min(rows, cols);
  std::vector<__int128> d(static_cast<std::size_t>(r + 1), 0);
  d[0] = 1;
  auto subsets = [](int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
      if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
      }
      for (int i = start; i < n; ++i) {
        cur.push_back(i);
        self(self, i + 1);
        cur.pop_back();
      }
    };
    rec(rec, 0);
    return out;
  };
  for (int k = 1; k <= r; ++k) {
    __int128 g = 0;
    const auto rs = subsets(rows, k);
    const auto cs = subsets(cols, k);
    for (const auto& ri : rs) {
      for (const auto& ci : cs) {
        std::vector<std::vector<__int128>> sub(static_cast<std::size_t>(k), std::vector<__int128>(k));
        for (int a = 0; a < k; ++a)
          for (int b = 0; b < k; ++b) sub[a][b] = M[ri[a]][ci[b]];
        g = gcd128(g, det128(std::move(sub)));
      }
    }
    d[k] = g;
  }
  std::vector<long long> s(static_cast<std::size_t>(r), 0);
  for (int k = 1; k <= r; ++k) {
    s[k - 1] = d[k] == 0 ? 0 : static_cast<long long>(d[k] / d[k - 1]);
  }
  return s;
}

}  // namespace oracle
