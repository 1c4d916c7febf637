#include "cubtors/bigfloat.hpp"

#include <algorithm>
#include <cstdlib>
#include <memory>

#include "cubtors/errors.hpp"

namespace cubtors {

namespace {
long min_prec(const BigFloat& a, const BigFloat& b) { return std::min(a.precision(), b.precision()); }
}  // namespace

BigFloat::BigFloat(long precision_bits) {
  mpfr_init2(v_, std::max<long>(precision_bits, MPFR_PREC_MIN));
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(long n, long precision_bits) : BigFloat(precision_bits) {
  mpfr_set_si(v_, n, MPFR_RNDN);
}

BigFloat::BigFloat(const Rational& r, long precision_bits) : BigFloat(precision_bits) {
  mpfr_set_q(v_, r.get().get_mpq_t(), MPFR_RNDN);
}

BigFloat BigFloat::from_double(double d, long precision_bits) {
  BigFloat x(precision_bits);
  mpfr_set_d(x.v_, d, MPFR_RNDN);
  return x;
}

BigFloat::BigFloat(const BigFloat& o) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::with_precision(long precision_bits) const {
  BigFloat r(precision_bits);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

long BigFloat::exponent() const {
  if (mpfr_zero_p(v_)) return -(1L << 40);
  return static_cast<long>(mpfr_get_exp(v_));
}

Rational BigFloat::to_rational() const {
  if (!is_finite()) throw PrecisionExhausted("non-finite float");
  if (is_zero()) return Rational(0);
  mpz_class m;
  mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), v_);
  if (e >= 0) {
    mpz_class s;
    mpz_mul_2exp(s.get_mpz_t(), m.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
    return Rational(s);
  }
  mpz_class d;
  mpz_ui_pow_ui(d.get_mpz_t(), 2, static_cast<unsigned long>(-e));
  return Rational(m, d);
}

std::string BigFloat::to_string(int digits) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rg", digits, v_);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

BigFloat BigFloat::operator-() const {
  BigFloat r(precision());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat r(min_prec(a, b));
  mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat r(min_prec(a, b));
  mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat r(min_prec(a, b));
  mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  BigFloat r(min_prec(a, b));
  mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat& BigFloat::operator+=(const BigFloat& o) { return *this = *this + o; }
BigFloat& BigFloat::operator-=(const BigFloat& o) { return *this = *this - o; }
BigFloat& BigFloat::operator*=(const BigFloat& o) { return *this = *this * o; }

BigFloat BigFloat::abs() const {
  BigFloat r(precision());
  mpfr_abs(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::sqrt() const {
  BigFloat r(precision());
  mpfr_sqrt(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::mul_2exp(long e) const {
  BigFloat r(precision());
  mpfr_mul_2si(r.v_, v_, e, MPFR_RNDN);
  return r;
}

BigFloat pow2(long e, long precision_bits) {
  BigFloat r(1, precision_bits);
  return r.mul_2exp(e);
}

BigComplex operator/(const BigComplex& a, const BigComplex& b) {
  BigFloat d = b.norm2();
  if (d.is_zero()) throw DivisionByZero("complex division by zero");
  BigFloat re = a.re_ * b.re_ + a.im_ * b.im_;
  BigFloat im = a.im_ * b.re_ - a.re_ * b.im_;
  return {re / d, im / d};
}

std::string BigComplex::to_string(int digits) const {
  std::string s = re_.to_string(digits);
  if (im_.sign() < 0)
    s += " - " + (-im_).to_string(digits) + "i";
  else
    s += " + " + im_.to_string(digits) + "i";
  return s;
}

}  // namespace cubtors
