#pragma once

#include "nclandau/scalars.hpp"

#include <vector>

namespace nclandau {

enum class SolveStatus { unique, inconsistent, underdetermined };

struct LinearSolution {
  SolveStatus status;
  std::vector<GaussianRational> x;  // filled only when status == unique
  std::size_t rank = 0;
};

/// Exact Gauss-Jordan elimination on a (rows x cols) system given row-major.
/// Overdetermined systems are fine as long as they are consistent.
LinearSolution solve_exact(std::vector<std::vector<GaussianRational>> a, std::vector<GaussianRational> b);

}  // namespace nclandau
