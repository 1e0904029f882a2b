#include "fdomlab/rational.hpp"

#include <numeric>
#include <ostream>

#include "fdomlab/errors.hpp"

namespace fdom {

namespace {

bool fits(const mpz_class& z) { return z.fits_slong_p(); }

mpq_class small_to_mpq(std::int64_t n, std::int64_t d) {
  mpq_class q(mpz_class(static_cast<long>(n)), mpz_class(static_cast<long>(d)));
  return q;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  return std::gcd(a, b);
}

}  // namespace

Rational::Rational(long long n, long long d) {
  if (d == 0) throw InvalidArgument("rational with zero denominator");
  if (d == INT64_MIN || n == INT64_MIN) {
    set_big(mpq_class(mpz_class(static_cast<long>(n)), mpz_class(static_cast<long>(d))));
    return;
  }
  if (d < 0) {
    n = -n;
    d = -d;
  }
  std::int64_t g = gcd64(n, d);
  num_ = n / g;
  den_ = d / g;
}

Rational::Rational(const mpq_class& q) {
  mpq_class c(q);
  c.canonicalize();
  set_big(std::move(c));
}

void Rational::set_big(mpq_class q) {
  q.canonicalize();
  if (fits(q.get_num()) && fits(q.get_den()) && q.get_num().get_si() != INT64_MIN) {
    num_ = q.get_num().get_si();
    den_ = q.get_den().get_si();
    big_.reset();
  } else {
    big_ = std::make_shared<const mpq_class>(std::move(q));
    num_ = 0;
    den_ = 1;
  }
}

Rational Rational::parse(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return from_strings(text, "1");
  return from_strings(text.substr(0, slash), text.substr(slash + 1));
}

Rational Rational::from_strings(const std::string& num, const std::string& den) {
  mpz_class n, d;
  if (n.set_str(num, 10) != 0 || d.set_str(den, 10) != 0)
    throw InvalidArgument("malformed rational '" + num + "/" + den + "'");
  if (d == 0) throw InvalidArgument("rational with zero denominator");
  Rational r;
  r.set_big(mpq_class(n, d));
  return r;
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return small_to_mpq(num_, den_);
}

double Rational::to_double() const {
  if (big_) return big_->get_d();
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::num_str() const {
  if (big_) return big_->get_num().get_str();
  return std::to_string(num_);
}

std::string Rational::den_str() const {
  if (big_) return big_->get_den().get_str();
  return std::to_string(den_);
}

std::string Rational::str() const {
  if (is_integer()) return num_str();
  return num_str() + "/" + den_str();
}

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

bool Rational::is_integer() const {
  if (big_) return big_->get_den() == 1;
  return den_ == 1;
}

Rational Rational::operator-() const {
  if (big_) return Rational(mpq_class(-*big_));
  if (num_ == INT64_MIN) return Rational(mpq_class(-to_mpq()));
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  if (!big_ && !o.big_) {
    // a/b + c/d with g = gcd(b,d): (a*(d/g) + c*(b/g)) / (b/g*d)
    std::int64_t g = gcd64(den_, o.den_);
    std::int64_t b1 = den_ / g, d1 = o.den_ / g;
    std::int64_t t1, t2, t, den;
    if (!__builtin_mul_overflow(num_, d1, &t1) && !__builtin_mul_overflow(o.num_, b1, &t2) &&
        !__builtin_add_overflow(t1, t2, &t) && t != INT64_MIN) {
      std::int64_t g2 = gcd64(t, g);
      if (!__builtin_mul_overflow(b1, o.den_ / g2, &den)) {
        num_ = t / g2;
        den_ = den;
        if (num_ == 0) den_ = 1;
        return *this;
      }
    }
  }
  set_big(to_mpq() + o.to_mpq());
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  if (!big_ && !o.big_) {
    if (num_ == 0 || o.num_ == 0) {
      num_ = 0;
      den_ = 1;
      return *this;
    }
    std::int64_t g1 = gcd64(num_, o.den_), g2 = gcd64(o.num_, den_);
    std::int64_t n, d;
    if (!__builtin_mul_overflow(num_ / g1, o.num_ / g2, &n) &&
        !__builtin_mul_overflow(den_ / g2, o.den_ / g1, &d) && n != INT64_MIN) {
      num_ = n;
      den_ = d;
      return *this;
    }
  }
  set_big(to_mpq() * o.to_mpq());
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.sign() == 0) throw InvalidArgument("division by zero rational");
  if (!o.big_) {
    Rational inv;
    if (o.num_ != INT64_MIN) {
      inv.num_ = o.num_ < 0 ? -o.den_ : o.den_;
      inv.den_ = o.num_ < 0 ? -o.num_ : o.num_;
      return *this *= inv;
    }
  }
  set_big(to_mpq() / o.to_mpq());
  return *this;
}

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;  // canonical storage: big values never fit in 64 bits
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    __int128 l = static_cast<__int128>(a.num_) * b.den_;
    __int128 r = static_cast<__int128>(b.num_) * a.den_;
    return l <=> r;
  }
  int c = cmp(a.to_mpq(), b.to_mpq());
  return c <=> 0;
}

std::size_t Rational::hash() const {
  if (big_) return std::hash<std::string>()(big_->get_str());
  return std::hash<std::int64_t>()(num_) * 1000003u ^ std::hash<std::int64_t>()(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

Rational lcm_den(const Rational& a, const Rational& b) {
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), a.to_mpq().get_den_mpz_t(), b.to_mpq().get_den_mpz_t());
  return Rational(mpq_class(l));
}

}  // namespace fdom
