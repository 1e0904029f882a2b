#pragma once

#include <cstdint>
#include <vector>

#include "fdomlab/rational.hpp"

namespace fdom {

// max c.x  s.t.  A x <= b, x >= 0.
struct LinearProgram {
  std::vector<std::vector<Rational>> a;  // rows
  std::vector<Rational> b;
  std::vector<Rational> c;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpSolution {
  LpStatus status = LpStatus::kOptimal;
  Rational value;
  std::vector<Rational> x;  // primal, one per column
  std::vector<Rational> y;  // dual, one per row: y >= 0, A^T y >= c, b.y = value
};

// Exact simplex on an integer tableau with fraction-free (Bareiss) pivots.
// Runs on checked 64-bit integers and restarts with GMP on overflow. Uses
// Dantzig's rule, switching to Bland's rule after a run of degenerate pivots.
// An optimal answer is re-verified (feasibility, equal objectives,
// complementary slackness) before it is returned.
LpSolution simplex_exact(const LinearProgram& lp);

// Same contract for integer data, rows stored densely: a[i * cols + j].
LpSolution simplex_integer(int rows, int cols, const std::vector<std::int64_t>& a,
                           const std::vector<std::int64_t>& b, const std::vector<std::int64_t>& c);

}  // namespace fdom
