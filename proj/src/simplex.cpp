#include "lechlab/simplex.hpp"

#include <cstddef>

#include "lechlab/errors.hpp"

namespace lechlab {

// Phase-I simplex on the tableau
//   [ A | I ] (x, a) = b,  b >= 0,  minimize sum of artificials a.
// Bland's rule (smallest-index entering and leaving) guarantees
// termination without any perturbation.
bool lpFeasible(std::vector<std::vector<Rat>> A, std::vector<Rat> b) {
  const size_t m = A.size();
  if (m == 0) return true;
  const size_t n = A[0].size();
  for (const auto& row : A)
    if (row.size() != n) throw InputError("ragged LP matrix");
  if (b.size() != m) throw InputError("LP rhs size mismatch");

  for (size_t i = 0; i < m; ++i) {
    if (b[i] < 0) {
      for (auto& v : A[i]) v = -v;
      b[i] = -b[i];
    }
  }

  const size_t cols = n + m;  // structural + artificial
  std::vector<std::vector<Rat>> T(m, std::vector<Rat>(cols + 1));
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < n; ++j) T[i][j] = A[i][j];
    T[i][n + i] = 1;
    T[i][cols] = b[i];
  }
  std::vector<size_t> basis(m);
  for (size_t i = 0; i < m; ++i) basis[i] = n + i;

  // Objective row: minimize sum of artificials; reduced costs start as
  // z_j - c_j = sum of artificial rows.
  std::vector<Rat> z(cols + 1);
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j <= cols; ++j) z[j] += T[i][j];
  for (size_t i = 0; i < m; ++i) z[n + i] -= 1;

  for (;;) {
    // Entering: smallest index with positive reduced cost among
    // non-artificial columns first, then artificial (Bland).
    size_t enter = cols;
    for (size_t j = 0; j < cols; ++j) {
      if (z[j] > 0) { enter = j; break; }
    }
    if (enter == cols) break;  // optimal

    size_t leave = m;
    for (size_t i = 0; i < m; ++i) {
      if (T[i][enter] > 0) {
        if (leave == m) {
          leave = i;
        } else {
          const Rat lhs = T[i][cols] * T[leave][enter];
          const Rat rhs = T[leave][cols] * T[i][enter];
          if (lhs < rhs || (lhs == rhs && basis[i] < basis[leave])) leave = i;
        }
      }
    }
    if (leave == m) break;  // unbounded cannot happen in phase I

    const Rat piv = T[leave][enter];
    for (size_t j = 0; j <= cols; ++j) T[leave][j] /= piv;
    for (size_t i = 0; i < m; ++i) {
      if (i == leave) continue;
      const Rat f = T[i][enter];
      if (f == 0) continue;
      for (size_t j = 0; j <= cols; ++j) T[i][j] -= f * T[leave][j];
    }
    const Rat fz = z[enter];
    if (fz != 0)
      for (size_t j = 0; j <= cols; ++j) z[j] -= fz * T[leave][j];
    basis[leave] = enter;
  }

  return z[cols] == 0;
}

}  // namespace lechlab
