#include "cloci/linalg.hpp"

#include <cstdlib>

namespace cloci {

std::optional<std::vector<Rat>> solve_linear(const IntMatrix& m,
                                             const std::vector<Rat>& rhs) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rat(m[i][j]);
    a[i][n] = rhs[i];
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[col], a[pivot]);
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      Rat factor = a[row][col] / a[col][col];
      for (std::size_t j = col; j <= n; ++j) a[row][j] -= factor * a[col][j];
    }
  }
  std::vector<Rat> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n] / a[i][i];
  return x;
}

// Bareiss sweep: after step k the diagonal entry a[k][k] equals the leading
// principal minor det M_{k+1}, provided no pivot vanished. A vanishing pivot
// means that minor is zero, which already settles definiteness, so the sweep
// records the zero and stops.
std::vector<Int> leading_principal_minors(const IntMatrix& m) {
  const std::size_t n = m.size();
  std::vector<Int> minors(n, 0);
  IntMatrix a = m;
  Int prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (k > 0 && a[k - 1][k - 1] == 0) break;  // later minors left as zero
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
    minors[k] = a[k][k];
  }
  return minors;
}

Int determinant(const IntMatrix& m) {
  if (m.empty()) return 1;
  auto minors = leading_principal_minors(m);
  // A zero pivot mid-sweep leaves the tail zero; fall back to expansion by
  // the first column in that rare case.
  for (std::size_t k = 0; k + 1 < m.size(); ++k) {
    if (minors[k] == 0) {
      Int det = 0;
      const std::size_t n = m.size();
      for (std::size_t i = 0; i < n; ++i) {
        if (m[i][0] == 0) continue;
        IntMatrix sub;
        sub.reserve(n - 1);
        for (std::size_t r = 0; r < n; ++r) {
          if (r == i) continue;
          sub.emplace_back(m[r].begin() + 1, m[r].end());
        }
        Int term = m[i][0] * determinant(sub);
        det += (i % 2 == 0) ? term : -term;
      }
      return det;
    }
  }
  return minors.back();
}

bool is_negative_definite(const IntMatrix& m, std::size_t* first_bad) {
  auto minors = leading_principal_minors(m);
  for (std::size_t k = 0; k < minors.size(); ++k) {
    bool ok = (k % 2 == 0) ? (minors[k] < 0) : (minors[k] > 0);
    if (!ok) {
      if (first_bad) *first_bad = k + 1;
      return false;
    }
  }
  return true;
}

}  // namespace cloci
