#pragma once

#include <optional>
#include <vector>

#include "voaf/rational.hpp"
#include "voaf/scalar.hpp"

namespace voaf {

template <class F>
using Matrix = std::vector<std::vector<F>>;

inline bool field_is_zero(const Rat& r) { return r == 0; }
inline bool field_is_zero(const Scalar& s) { return s.is_zero(); }

template <class F>
struct Echelon {
  Matrix<F> rows;          // reduced row echelon form, zero rows dropped
  std::vector<int> pivots; // pivot column of each row
};

// Gauss-Jordan elimination; pivots are chosen left to right.
template <class F>
Echelon<F> rref(Matrix<F> a, int ncols) {
  Echelon<F> out;
  size_t r = 0;
  for (int c = 0; c < ncols && r < a.size(); ++c) {
    size_t piv = r;
    while (piv < a.size() && field_is_zero(a[piv][c])) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[r], a[piv]);
    F inv = F(1) / a[r][c];
    for (int j = c; j < ncols; ++j)
      if (!field_is_zero(a[r][j])) a[r][j] = a[r][j] * inv;
    for (size_t i = 0; i < a.size(); ++i) {
      if (i == r || field_is_zero(a[i][c])) continue;
      F f = a[i][c];
      for (int j = c; j < ncols; ++j)
        if (!field_is_zero(a[r][j])) a[i][j] = a[i][j] - f * a[r][j];
    }
    out.pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  out.rows = std::move(a);
  return out;
}

template <class F>
int rank(const Matrix<F>& a, int ncols) {
  return static_cast<int>(rref(a, ncols).pivots.size());
}

// Solves sum_j x_j * cols[j] = target.  Free unknowns are set to zero, so the
// solution uses the earliest independent columns.
template <class F>
std::optional<std::vector<F>> solve_columns(const std::vector<std::vector<F>>& cols, const std::vector<F>& target) {
  size_t n = cols.size(), m = target.size();
  Matrix<F> a(m, std::vector<F>(n + 1, F(0)));
  for (size_t j = 0; j < n; ++j)
    for (size_t i = 0; i < m; ++i) a[i][j] = cols[j][i];
  for (size_t i = 0; i < m; ++i) a[i][n] = target[i];
  auto e = rref(std::move(a), static_cast<int>(n) + 1);
  std::vector<F> x(n, F(0));
  for (size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == static_cast<int>(n)) return std::nullopt;
    x[e.pivots[r]] = e.rows[r][n];
  }
  return x;
}

// true iff the unit vector e_k lies in the row space of a
template <class F>
bool unit_in_row_space(const Matrix<F>& a, int ncols, int k) {
  int r0 = rank(a, ncols);
  Matrix<F> b = a;
  std::vector<F> e(ncols, F(0));
  e[k] = F(1);
  b.push_back(e);
  return rank(b, ncols) == r0;
}

}  // namespace voaf
