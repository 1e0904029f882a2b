#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <limits>

#include "fdomlab/errors.hpp"
#include "fdomlab/lp.hpp"

namespace fdom {

namespace {

struct Overflow {};

constexpr int kDegenerateRunBeforeBland = 50;

// (a*b - c*e) / d, exact by the Bareiss invariant.
inline std::int64_t bareiss(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t e, std::int64_t d) {
  __int128 v = static_cast<__int128>(a) * b - static_cast<__int128>(c) * e;
  if (d != 1) v /= d;
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw Overflow{};
  return static_cast<std::int64_t>(v);
}

inline mpz_class bareiss(const mpz_class& a, const mpz_class& b, const mpz_class& c, const mpz_class& e,
                         const mpz_class& d) {
  mpz_class v = a * b - c * e;
  mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), d.get_mpz_t());
  return v;
}

// sign(a*b - c*e)
inline int cross_sign(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t e) {
  __int128 l = static_cast<__int128>(a) * b, r = static_cast<__int128>(c) * e;
  return (l > r) - (l < r);
}

inline int cross_sign(const mpz_class& a, const mpz_class& b, const mpz_class& c, const mpz_class& e) {
  return sgn(mpz_class(a * b - c * e));
}

// Exact dot-product accumulator: checked __int128 for int64 data, GMP otherwise.
struct Acc64 {
  __int128 v = 0;
  void add(std::int64_t a, std::int64_t b) {
    __int128 p;
    if (__builtin_mul_overflow(static_cast<__int128>(a), static_cast<__int128>(b), &p) ||
        __builtin_add_overflow(v, p, &v))
      throw Overflow{};
  }
  int cmp(const Acc64& o) const { return (v > o.v) - (v < o.v); }
};

struct AccMpz {
  mpz_class v = 0;
  void add(const mpz_class& a, const mpz_class& b) { v += a * b; }
  int cmp(const AccMpz& o) const { return sgn(mpz_class(v - o.v)); }
};

template <typename Int>
using AccFor = std::conditional_t<std::is_same_v<Int, std::int64_t>, Acc64, AccMpz>;

template <typename Int>
struct IntegerResult {
  LpStatus status = LpStatus::kOptimal;
  std::vector<Int> x;  // numerators over d
  std::vector<Int> y;
  Int value{};
  Int d{1};
};

template <typename Int>
class Tableau {
 public:
  Tableau(int m, int n, const std::vector<Int>& a, const std::vector<Int>& b, const std::vector<Int>& c)
      : m_(m), n_(n), a_(a), b_(b), c_(c) {
    need_artificial_ = std::any_of(b.begin(), b.end(), [](const Int& x) { return x < 0; });
    art_ = n_ + m_;
    width_ = n_ + m_ + (need_artificial_ ? 1 : 0) + 1;
    rhs_ = width_ - 1;
    t_.assign(static_cast<std::size_t>(m_ + 1) * width_, Int(0));
    excluded_.assign(width_ - 1, 0);
    basis_.resize(m_);
    for (int i = 0; i < m_; ++i) {
      for (int j = 0; j < n_; ++j) at(i, j) = a_[static_cast<std::size_t>(i) * n_ + j];
      at(i, n_ + i) = 1;
      if (need_artificial_) at(i, art_) = -1;
      at(i, rhs_) = b_[i];
      basis_[i] = n_ + i;
    }
  }

  IntegerResult<Int> solve() {
    IntegerResult<Int> res;
    if (need_artificial_ && !phase_one()) {
      res.status = LpStatus::kInfeasible;
      return res;
    }
    set_objective();
    if (!optimise()) {
      res.status = LpStatus::kUnbounded;
      return res;
    }
    res.d = d_;
    res.x.assign(n_, Int(0));
    for (int i = 0; i < m_; ++i)
      if (basis_[i] < n_) res.x[basis_[i]] = at(i, rhs_);
    res.y.resize(m_);
    for (int i = 0; i < m_; ++i) res.y[i] = at(m_, n_ + i);
    res.value = at(m_, rhs_);
    verify(res);
    return res;
  }

 private:
  Int& at(int i, int j) { return t_[static_cast<std::size_t>(i) * width_ + j]; }

  void pivot(int r, int s) {
    const Int p = at(r, s);
    for (int i = 0; i <= m_; ++i) {
      if (i == r) continue;
      const Int f = at(i, s);
      Int* row = &at(i, 0);
      const Int* prow = &at(r, 0);
      for (int j = 0; j < width_; ++j) row[j] = bareiss(row[j], p, f, prow[j], d_);
    }
    d_ = p;
    basis_[r] = s;
  }

  void negate_row(int r) {
    for (int j = 0; j < width_; ++j) at(r, j) = -at(r, j);
  }

  // Returns false when the objective is unbounded.
  bool optimise() {
    int degenerate = 0;
    bool bland = false;
    while (true) {
      int s = -1;
      for (int j = 0; j < width_ - 1; ++j) {
        if (excluded_[j] || !(at(m_, j) < 0)) continue;
        if (s < 0 || (!bland && at(m_, j) < at(m_, s))) s = j;
        if (bland) break;
      }
      if (s < 0) return true;
      int r = -1;
      for (int i = 0; i < m_; ++i) {
        if (!(at(i, s) > 0)) continue;
        if (r < 0) {
          r = i;
          continue;
        }
        int c = cross_sign(at(i, rhs_), at(r, s), at(r, rhs_), at(i, s));
        if (c < 0 || (c == 0 && basis_[i] < basis_[r])) r = i;
      }
      if (r < 0) return false;
      if (at(r, rhs_) == 0) {
        if (++degenerate > kDegenerateRunBeforeBland) bland = true;
      } else {
        degenerate = 0;
      }
      pivot(r, s);
    }
  }

  // Single auxiliary variable: maximise -x_a until the rows are feasible.
  bool phase_one() {
    at(m_, art_) = 1;
    int r = 0;
    for (int i = 1; i < m_; ++i)
      if (at(i, rhs_) < at(r, rhs_)) r = i;
    negate_row(r);
    pivot(r, art_);
    optimise();
    if (at(m_, rhs_) < 0) return false;
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] != art_) continue;
      for (int j = 0; j < art_; ++j) {
        if (at(i, j) == 0) continue;
        if (at(i, j) < 0) negate_row(i);
        pivot(i, j);
        break;
      }
    }
    excluded_[art_] = 1;
    return true;
  }

  // Objective row for max c.x in the current basis, scaled by d.
  void set_objective() {
    for (int j = 0; j < width_; ++j) at(m_, j) = 0;
    for (int j = 0; j < n_; ++j) at(m_, j) = -c_[j] * d_;
    for (int i = 0; i < m_; ++i) {
      int k = basis_[i];
      if (k >= n_ || c_[k] == 0) continue;
      for (int j = 0; j < width_; ++j) {
        Int v = at(m_, j);
        at(m_, j) = bareiss(v, Int(1), -c_[k], at(i, j), Int(1));
      }
    }
  }

  // Feasibility of both solutions, equal objectives, complementary slackness.
  void verify(const IntegerResult<Int>& r) {
    using Acc = AccFor<Int>;
    Acc cx, by;
    for (int j = 0; j < n_; ++j) {
      if (r.x[j] < 0) throw InternalError("simplex produced a negative primal value");
      cx.add(c_[j], r.x[j]);
    }
    for (int i = 0; i < m_; ++i) {
      if (r.y[i] < 0) throw InternalError("simplex produced a negative dual value");
      by.add(b_[i], r.y[i]);
    }
    if (cx.cmp(by) != 0) throw InternalError("simplex primal and dual objectives differ");
    for (int i = 0; i < m_; ++i) {
      Acc lhs, rhs;
      for (int j = 0; j < n_; ++j) lhs.add(a_[static_cast<std::size_t>(i) * n_ + j], r.x[j]);
      rhs.add(b_[i], r.d);
      int c = lhs.cmp(rhs);
      if (c > 0 || (c < 0 && r.y[i] != 0)) throw InternalError("simplex primal check failed");
    }
    for (int j = 0; j < n_; ++j) {
      Acc lhs, rhs;
      for (int i = 0; i < m_; ++i) lhs.add(a_[static_cast<std::size_t>(i) * n_ + j], r.y[i]);
      rhs.add(c_[j], r.d);
      int c = lhs.cmp(rhs);
      if (c < 0 || (c > 0 && r.x[j] != 0)) throw InternalError("simplex dual check failed");
    }
  }

  int m_, n_;
  const std::vector<Int>& a_;
  const std::vector<Int>& b_;
  const std::vector<Int>& c_;
  bool need_artificial_ = false;
  int art_ = 0;
  int width_ = 0;
  int rhs_ = 0;
  std::vector<Int> t_;
  std::vector<char> excluded_;
  std::vector<int> basis_;
  Int d_{1};
};

Rational ratio(const mpz_class& num, const mpz_class& den) { return Rational(mpq_class(num, den)); }

// Scales: row i of (A, b) was multiplied by row_scale[i], c by obj_scale.
LpSolution finish(const IntegerResult<mpz_class>& r, const std::vector<mpz_class>& row_scale,
                  const mpz_class& obj_scale) {
  LpSolution out;
  out.status = r.status;
  if (r.status != LpStatus::kOptimal) return out;
  for (const auto& x : r.x) out.x.push_back(ratio(x, r.d));
  for (std::size_t i = 0; i < r.y.size(); ++i) out.y.push_back(ratio(r.y[i] * row_scale[i], r.d * obj_scale));
  out.value = ratio(r.value, r.d * obj_scale);
  return out;
}

LpSolution solve_mpz(int m, int n, const std::vector<mpz_class>& a, const std::vector<mpz_class>& b,
                     const std::vector<mpz_class>& c, const std::vector<mpz_class>& row_scale,
                     const mpz_class& obj_scale) {
  Tableau<mpz_class> t(m, n, a, b, c);
  return finish(t.solve(), row_scale, obj_scale);
}

bool fits64(const mpz_class& x) { return x.fits_slong_p(); }

}  // namespace

LpSolution simplex_integer(int rows, int cols, const std::vector<std::int64_t>& a,
                           const std::vector<std::int64_t>& b, const std::vector<std::int64_t>& c) {
  if (a.size() != static_cast<std::size_t>(rows) * cols || b.size() != static_cast<std::size_t>(rows) ||
      c.size() != static_cast<std::size_t>(cols))
    throw InvalidArgument("linear program dimensions do not match");
  try {
    Tableau<std::int64_t> t(rows, cols, a, b, c);
    auto r = t.solve();
    LpSolution out;
    out.status = r.status;
    if (r.status != LpStatus::kOptimal) return out;
    for (auto x : r.x) out.x.emplace_back(x, r.d);
    for (auto y : r.y) out.y.emplace_back(y, r.d);
    out.value = Rational(r.value, r.d);
    return out;
  } catch (const Overflow&) {
  }
  std::vector<mpz_class> A(a.begin(), a.end()), B(b.begin(), b.end()), C(c.begin(), c.end());
  return solve_mpz(rows, cols, A, B, C, std::vector<mpz_class>(rows, 1), 1);
}

LpSolution simplex_exact(const LinearProgram& lp) {
  int m = static_cast<int>(lp.a.size());
  int n = static_cast<int>(lp.c.size());
  if (static_cast<int>(lp.b.size()) != m) throw InvalidArgument("linear program dimensions do not match");
  for (const auto& row : lp.a)
    if (static_cast<int>(row.size()) != n) throw InvalidArgument("linear program dimensions do not match");

  auto lcm_of = [](auto begin, auto end) {
    mpz_class l = 1;
    for (auto it = begin; it != end; ++it) {
      mpz_class d = it->to_mpq().get_den();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    return l;
  };
  std::vector<mpz_class> row_scale(m), A(static_cast<std::size_t>(m) * n), B(m), C(n);
  bool small = true;
  for (int i = 0; i < m; ++i) {
    mpz_class s = lcm_of(lp.a[i].begin(), lp.a[i].end());
    mpz_class db = lp.b[i].to_mpq().get_den();
    mpz_lcm(s.get_mpz_t(), s.get_mpz_t(), db.get_mpz_t());
    row_scale[i] = s;
    for (int j = 0; j < n; ++j) {
      mpq_class v = lp.a[i][j].to_mpq() * s;
      A[static_cast<std::size_t>(i) * n + j] = v.get_num();
      small = small && fits64(v.get_num());
    }
    mpq_class v = lp.b[i].to_mpq() * s;
    B[i] = v.get_num();
    small = small && fits64(B[i]);
  }
  mpz_class obj_scale = lcm_of(lp.c.begin(), lp.c.end());
  for (int j = 0; j < n; ++j) {
    mpq_class v = lp.c[j].to_mpq() * obj_scale;
    C[j] = v.get_num();
    small = small && fits64(C[j]);
  }
  if (small) {
    std::vector<std::int64_t> a64, b64, c64;
    for (const auto& x : A) a64.push_back(x.get_si());
    for (const auto& x : B) b64.push_back(x.get_si());
    for (const auto& x : C) c64.push_back(x.get_si());
    try {
      Tableau<std::int64_t> t(m, n, a64, b64, c64);
      auto r = t.solve();
      IntegerResult<mpz_class> big;
      big.status = r.status;
      big.d = r.d;
      big.value = r.value;
      for (auto x : r.x) big.x.emplace_back(static_cast<long>(x));
      for (auto y : r.y) big.y.emplace_back(static_cast<long>(y));
      return finish(big, row_scale, obj_scale);
    } catch (const Overflow&) {
    }
  }
  return solve_mpz(m, n, A, B, C, row_scale, obj_scale);
}

}  // namespace fdom
