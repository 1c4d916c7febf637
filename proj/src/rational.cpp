#include "cubtors/rational.hpp"

#include <cctype>

#include "cubtors/errors.hpp"

namespace cubtors {

namespace {

bool valid_integer_text(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!valid_integer_text(s)) throw ParseError("not an integer: '" + std::string(s) + "'");
  if (s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s));
}

}  // namespace

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  return Rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero("rational division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::inv() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  return Rational(mpq_class(1) / v_);
}

Rational Rational::pow(unsigned e) const {
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), e);
  return Rational(n, d);
}

std::uint64_t rational_mod(const Rational& r, std::uint64_t p) {
  mpz_class pp(static_cast<unsigned long>(p));
  mpz_class d = r.den() % pp;
  if (d == 0) throw NonIntegral("denominator of " + r.to_string() + " divisible by " + std::to_string(p));
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), pp.get_mpz_t());
  mpz_class n = r.num() % pp;
  if (n < 0) n += pp;
  mpz_class res = (n * inv) % pp;
  return res.get_ui();
}

long ilog2(const Integer& n) {
  return static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 2)) - 1;
}

bool is_perfect_square(const Integer& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

}  // namespace cubtors
