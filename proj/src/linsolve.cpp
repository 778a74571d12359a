#include "polarfol/linsolve.hpp"

namespace polarfol {

SolveResult solve_rational(const Matrix& a, const Vec& b) {
  const int m = a.rows(), n = a.cols();
  assert(static_cast<int>(b.size()) == m);
  Matrix aug(m, n + 1);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, n) = b[i];
  }

  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < n && row < m; ++col) {
    int p = -1;
    for (int i = row; i < m; ++i)
      if (sgn(aug.at(i, col)) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int j = col; j <= n; ++j) std::swap(aug.at(p, j), aug.at(row, j));
    const Rational inv = 1 / aug.at(row, col);
    for (int j = col; j <= n; ++j) aug.at(row, j) *= inv;
    for (int i = 0; i < m; ++i) {
      if (i == row) continue;
      const Rational f = aug.at(i, col);
      if (sgn(f) == 0) continue;
      for (int j = col; j <= n; ++j) aug.at(i, j) -= f * aug.at(row, j);
    }
    pivot_col.push_back(col);
    ++row;
  }

  for (int i = row; i < m; ++i)
    if (sgn(aug.at(i, n)) != 0) return {SolveStatus::NoSolution, {}, {}};

  SolveResult res;
  res.particular.assign(n, Rational(0));
  for (size_t r = 0; r < pivot_col.size(); ++r) res.particular[pivot_col[r]] = aug.at(static_cast<int>(r), n);

  std::vector<bool> is_pivot(n, false);
  for (int c : pivot_col) is_pivot[c] = true;
  for (int c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    Vec v(n, Rational(0));
    v[c] = 1;
    for (size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -aug.at(static_cast<int>(r), c);
    res.nullspace.push_back(std::move(v));
  }
  res.status = res.nullspace.empty() ? SolveStatus::Unique : SolveStatus::Underdetermined;
  return res;
}

int rank(Matrix a) {
  const int m = a.rows(), n = a.cols();
  int row = 0;
  for (int col = 0; col < n && row < m; ++col) {
    int p = -1;
    for (int i = row; i < m; ++i)
      if (sgn(a.at(i, col)) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int j = col; j < n; ++j) std::swap(a.at(p, j), a.at(row, j));
    for (int i = row + 1; i < m; ++i) {
      const Rational f = a.at(i, col) / a.at(row, col);
      if (sgn(f) == 0) continue;
      for (int j = col; j < n; ++j) a.at(i, j) -= f * a.at(row, j);
    }
    ++row;
  }
  return row;
}

std::optional<Matrix> inverse(const Matrix& a) {
  const int n = a.rows();
  if (a.cols() != n) return std::nullopt;
  Matrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, n + i) = 1;
  }
  for (int col = 0; col < n; ++col) {
    int p = -1;
    for (int i = col; i < n; ++i)
      if (sgn(aug.at(i, col)) != 0) {
        p = i;
        break;
      }
    if (p < 0) return std::nullopt;
    if (p != col)
      for (int j = 0; j < 2 * n; ++j) std::swap(aug.at(p, j), aug.at(col, j));
    const Rational inv = 1 / aug.at(col, col);
    for (int j = 0; j < 2 * n; ++j) aug.at(col, j) *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == col) continue;
      const Rational f = aug.at(i, col);
      if (sgn(f) == 0) continue;
      for (int j = 0; j < 2 * n; ++j) aug.at(i, j) -= f * aug.at(col, j);
    }
  }
  Matrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

}  // namespace polarfol
