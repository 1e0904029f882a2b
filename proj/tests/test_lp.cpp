#include <gtest/gtest.h>

#include <random>

#include "fdomlab/lp.hpp"

using namespace fdom;

namespace {

// Solves a square system by Gaussian elimination; false if singular.
bool solve_square(std::vector<std::vector<Rational>> m, std::vector<Rational> rhs, std::vector<Rational>& out) {
  int n = static_cast<int>(rhs.size());
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (!m[r][c].is_zero()) piv = r;
    if (piv < 0) return false;
    std::swap(m[c], m[piv]);
    std::swap(rhs[c], rhs[piv]);
    for (int r = 0; r < n; ++r) {
      if (r == c || m[r][c].is_zero()) continue;
      Rational f = m[r][c] / m[c][c];
      for (int k = 0; k < n; ++k) m[r][k] -= f * m[c][k];
      rhs[r] -= f * rhs[c];
    }
  }
  out.resize(n);
  for (int i = 0; i < n; ++i) out[i] = rhs[i] / m[i][i];
  return true;
}

// Vertex enumeration oracle for tiny bounded LPs: every basic solution is the
// intersection of n tight constraints among A x <= b and x >= 0.
std::optional<Rational> vertex_oracle(const LinearProgram& lp) {
  int n = static_cast<int>(lp.c.size());
  int m = static_cast<int>(lp.b.size());
  std::vector<std::vector<Rational>> rows = lp.a;
  std::vector<Rational> rhs = lp.b;
  for (int j = 0; j < n; ++j) {
    std::vector<Rational> r(n, Rational(0));
    r[j] = Rational(-1);
    rows.push_back(r);
    rhs.push_back(Rational(0));
  }
  int total = m + n;
  std::optional<Rational> best;
  for (unsigned mask = 0; mask < (1u << total); ++mask) {
    if (__builtin_popcount(mask) != n) continue;
    std::vector<std::vector<Rational>> sq;
    std::vector<Rational> sr;
    for (int i = 0; i < total; ++i)
      if ((mask >> i) & 1u) {
        sq.push_back(rows[i]);
        sr.push_back(rhs[i]);
      }
    std::vector<Rational> x;
    if (!solve_square(sq, sr, x)) continue;
    bool feasible = true;
    for (int i = 0; i < total && feasible; ++i) {
      Rational s;
      for (int j = 0; j < n; ++j) s += rows[i][j] * x[j];
      if (s > rhs[i]) feasible = false;
    }
    if (!feasible) continue;
    Rational v;
    for (int j = 0; j < n; ++j) v += lp.c[j] * x[j];
    if (!best || v > *best) best = v;
  }
  return best;
}

void check_certificates(const LinearProgram& lp, const LpSolution& s) {
  int m = static_cast<int>(lp.b.size());
  int n = static_cast<int>(lp.c.size());
  Rational cx, by;
  for (int j = 0; j < n; ++j) {
    EXPECT_GE(s.x[j], Rational(0));
    cx += lp.c[j] * s.x[j];
  }
  for (int i = 0; i < m; ++i) {
    EXPECT_GE(s.y[i], Rational(0));
    by += lp.b[i] * s.y[i];
    Rational row;
    for (int j = 0; j < n; ++j) row += lp.a[i][j] * s.x[j];
    EXPECT_LE(row, lp.b[i]);
  }
  for (int j = 0; j < n; ++j) {
    Rational col;
    for (int i = 0; i < m; ++i) col += lp.a[i][j] * s.y[i];
    EXPECT_GE(col, lp.c[j]);
  }
  EXPECT_EQ(cx, s.value);
  EXPECT_EQ(by, s.value);
}

}  // namespace

TEST(Simplex, Examples) {
  LinearProgram box{{{1, 0}, {0, 1}}, {1, 1}, {1, 1}};
  auto s = simplex_exact(box);
  EXPECT_EQ(s.status, LpStatus::kOptimal);
  EXPECT_EQ(s.value, Rational(2));
  check_certificates(box, s);

  // Packing singletons of K3.
  LinearProgram k3{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, {1, 1, 1}, {1, 1, 1}};
  EXPECT_EQ(simplex_exact(k3).value, Rational(3));

  // Minimal dominating sets of C4: {0,1},{1,2},{2,3},{3,0},{0,2},{1,3}.
  std::vector<std::vector<int>> sets{{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}, {1, 3}};
  LinearProgram c4{std::vector<std::vector<Rational>>(4, std::vector<Rational>(6, Rational(0))),
                   std::vector<Rational>(4, Rational(1)), std::vector<Rational>(6, Rational(1))};
  for (int j = 0; j < 6; ++j)
    for (int v : sets[j]) c4.a[v][j] = Rational(1);
  EXPECT_EQ(simplex_exact(c4).value, Rational(2));
}

TEST(Simplex, StatusReporting) {
  LinearProgram unbounded{{{1, -1}}, {1}, {1, 1}};
  EXPECT_EQ(simplex_exact(unbounded).status, LpStatus::kUnbounded);
  LinearProgram infeasible{{{1, 1}, {-1, -1}}, {1, -2}, {1, 0}};
  EXPECT_EQ(simplex_exact(infeasible).status, LpStatus::kInfeasible);
  // Needs phase one: x >= 1 written as -x <= -1.
  LinearProgram shifted{{{-1, 0}, {1, 1}}, {-1, 3}, {Rational(1, 2), 1}};
  auto s = simplex_exact(shifted);
  EXPECT_EQ(s.status, LpStatus::kOptimal);
  EXPECT_EQ(s.value, Rational(5, 2));
  check_certificates(shifted, s);
}

TEST(Simplex, MatchesVertexEnumeration) {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> coef(-3, 6), den(1, 4), rhs(0, 9);
  int solved = 0;
  for (int t = 0; t < 300; ++t) {
    int n = 1 + t % 3, m = 1 + t % 4;
    LinearProgram lp;
    for (int i = 0; i < m; ++i) {
      std::vector<Rational> row;
      for (int j = 0; j < n; ++j) row.emplace_back(coef(rng), den(rng));
      lp.a.push_back(row);
      lp.b.emplace_back(rhs(rng) - (t % 5 == 0 ? 4 : 0), den(rng));
    }
    // Keep the problem bounded with a box row.
    lp.a.push_back(std::vector<Rational>(n, Rational(1)));
    lp.b.emplace_back(10);
    for (int j = 0; j < n; ++j) lp.c.emplace_back(coef(rng), den(rng));
    auto s = simplex_exact(lp);
    auto oracle = vertex_oracle(lp);
    if (!oracle) {
      EXPECT_EQ(s.status, LpStatus::kInfeasible);
      continue;
    }
    ASSERT_EQ(s.status, LpStatus::kOptimal);
    EXPECT_EQ(s.value, *oracle);
    check_certificates(lp, s);
    ++solved;
  }
  EXPECT_GT(solved, 200);
}

TEST(Simplex, LargeCoefficientsFallBackToGmp) {
  Rational big = Rational::parse("123456789012345678901234567890/7");
  LinearProgram lp{{{big, 1}, {1, big}}, {big, big}, {1, 1}};
  auto s = simplex_exact(lp);
  ASSERT_EQ(s.status, LpStatus::kOptimal);
  check_certificates(lp, s);
  EXPECT_EQ(s.value, Rational(2) * big / (big + Rational(1)));
}
