#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>

#include <gmpxx.h>

namespace fdom {

// Exact rational in lowest terms. Values that fit in 64-bit numerator and
// denominator are stored inline; anything larger moves to a shared GMP value.
class Rational {
 public:
  Rational() = default;
  Rational(long long n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long long n, long long d);
  explicit Rational(const mpq_class& q);

  // Parses "a", "a/b" or "-a/b" with arbitrary-size integers.
  static Rational parse(const std::string& text);
  // Builds num/den from decimal integer strings.
  static Rational from_strings(const std::string& num, const std::string& den);

  mpq_class to_mpq() const;
  double to_double() const;
  std::string str() const;  // "a" when integral, else "a/b"
  std::string num_str() const;
  std::string den_str() const;

  int sign() const;
  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_integer() const;
  bool is_small() const { return !big_; }
  // Only meaningful when is_small().
  std::int64_t small_num() const { return num_; }
  std::int64_t small_den() const { return den_; }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  std::size_t hash() const;

 private:
  void set_big(mpq_class q);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);
// Least common multiple of the denominators of a and b as a Rational integer.
Rational lcm_den(const Rational& a, const Rational& b);

}  // namespace fdom

template <>
struct std::hash<fdom::Rational> {
  std::size_t operator()(const fdom::Rational& r) const { return r.hash(); }
};
