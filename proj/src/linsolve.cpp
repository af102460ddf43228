#include "nclandau/linsolve.hpp"

#include <stdexcept>

namespace nclandau {

LinearSolution solve_exact(std::vector<std::vector<GaussianRational>> a, std::vector<GaussianRational> b) {
  const std::size_t rows = a.size();
  if (b.size() != rows) throw std::invalid_argument("solve_exact: right-hand side size mismatch");
  const std::size_t cols = rows ? a.front().size() : 0;
  for (const auto& row : a)
    if (row.size() != cols) throw std::invalid_argument("solve_exact: ragged matrix");

  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    const GaussianRational inv = GaussianRational(1) / a[r][c];
    for (std::size_t k = c; k < cols; ++k) a[r][k] *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      const GaussianRational f = a[i][c];
      for (std::size_t k = c; k < cols; ++k) a[i][k] -= f * a[r][k];
      b[i] -= f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }

  LinearSolution sol;
  sol.rank = r;
  for (std::size_t i = r; i < rows; ++i)
    if (!b[i].is_zero()) {
      sol.status = SolveStatus::inconsistent;
      return sol;
    }
  if (r < cols) {
    sol.status = SolveStatus::underdetermined;
    return sol;
  }
  sol.status = SolveStatus::unique;
  sol.x.assign(cols, GaussianRational(0));
  for (std::size_t i = 0; i < r; ++i) sol.x[pivot_col[i]] = b[i];
  return sol;
}

}  // namespace nclandau
