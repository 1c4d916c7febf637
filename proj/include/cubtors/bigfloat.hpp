#pragma once

#include <mpfr.h>

#include <ostream>
#include <string>

#include "cubtors/rational.hpp"

namespace cubtors {

/// Arbitrary-precision binary floating point number (MPFR-backed). Results of
/// binary operations carry the smaller precision of the two operands and are
/// correctly rounded to nearest.
class BigFloat {
 public:
  explicit BigFloat(long precision_bits = 64);
  BigFloat(long n, long precision_bits);
  BigFloat(const Rational& r, long precision_bits);
  static BigFloat from_double(double d, long precision_bits);

  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept;
  ~BigFloat();

  long precision() const { return static_cast<long>(mpfr_get_prec(v_)); }
  /// Same value rounded to a different precision.
  BigFloat with_precision(long precision_bits) const;

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  /// Binary exponent e with 0.5 <= |x| / 2^e < 1; a large negative value for zero.
  long exponent() const;
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Exact value of the binary float as a rational.
  Rational to_rational() const;
  std::string to_string(int digits = 20) const;

  BigFloat operator-() const;
  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  BigFloat& operator+=(const BigFloat& o);
  BigFloat& operator-=(const BigFloat& o);
  BigFloat& operator*=(const BigFloat& o);

  friend int compare(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_); }
  friend bool operator<(const BigFloat& a, const BigFloat& b) { return compare(a, b) < 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return compare(a, b) > 0; }

  BigFloat abs() const;
  BigFloat sqrt() const;
  /// x * 2^e, exact.
  BigFloat mul_2exp(long e) const;

  mpfr_srcptr raw() const { return v_; }
  mpfr_ptr raw() { return v_; }

 private:
  mpfr_t v_;
};

/// 2^e at the given precision.
BigFloat pow2(long e, long precision_bits);

inline std::ostream& operator<<(std::ostream& os, const BigFloat& x) { return os << x.to_string(); }

class BigComplex {
 public:
  explicit BigComplex(long precision_bits = 64) : re_(precision_bits), im_(precision_bits) {}
  BigComplex(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im)) {}
  BigComplex(const Rational& re, long precision_bits) : re_(re, precision_bits), im_(precision_bits) {}

  const BigFloat& re() const { return re_; }
  const BigFloat& im() const { return im_; }
  long precision() const { return std::min(re_.precision(), im_.precision()); }
  BigComplex with_precision(long p) const { return {re_.with_precision(p), im_.with_precision(p)}; }

  BigComplex conj() const { return {re_, -im_}; }
  BigFloat norm2() const { return re_ * re_ + im_ * im_; }
  BigFloat abs() const { return norm2().sqrt(); }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

  BigComplex operator-() const { return {-re_, -im_}; }
  friend BigComplex operator+(const BigComplex& a, const BigComplex& b) { return {a.re_ + b.re_, a.im_ + b.im_}; }
  friend BigComplex operator-(const BigComplex& a, const BigComplex& b) { return {a.re_ - b.re_, a.im_ - b.im_}; }
  friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
  }
  friend BigComplex operator*(const BigComplex& a, const BigFloat& s) { return {a.re_ * s, a.im_ * s}; }
  friend BigComplex operator/(const BigComplex& a, const BigComplex& b);

  std::string to_string(int digits = 20) const;

 private:
  BigFloat re_;
  BigFloat im_;
};

inline std::ostream& operator<<(std::ostream& os, const BigComplex& z) { return os << z.to_string(); }

}  // namespace cubtors
