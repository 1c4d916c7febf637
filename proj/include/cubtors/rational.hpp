#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace cubtors {

using Integer = mpz_class;

/// Exact rational number in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long n) : v_(n) {}  // NOLINT(implicit)
  Rational(int n) : v_(n) {}   // NOLINT(implicit)
  Rational(const Integer& n) : v_(n) {}  // NOLINT(implicit)
  Rational(const Integer& num, const Integer& den);
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  /// Parses "p", "-p", "p/q". Throws ParseError on malformed input and
  /// DivisionByZero on a zero denominator.
  static Rational parse(std::string_view text);

  Integer num() const { return v_.get_num(); }
  Integer den() const { return v_.get_den(); }
  const mpq_class& get() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  Rational inv() const;
  Rational abs() const { return Rational(mpq_class(::abs(v_))); }
  Rational pow(unsigned e) const;
  double to_double() const { return v_.get_d(); }
  std::string to_string() const { return v_.get_str(); }

 private:
  mpq_class v_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

/// Residue of r modulo the prime p. Throws NonIntegral if p divides the
/// denominator.
std::uint64_t rational_mod(const Rational& r, std::uint64_t p);

/// Floor of log2 of |n| (n != 0), i.e. bit length minus one.
long ilog2(const Integer& n);

/// True if n is the square of an integer (n >= 0).
bool is_perfect_square(const Integer& n);

}  // namespace cubtors
