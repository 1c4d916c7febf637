#include "cubtors/polynomial.hpp"

#include <sstream>

namespace cubtors {

QPoly parse_qpoly(const std::string& csv) {
  std::vector<Rational> v;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(Rational::parse(item));
  if (v.empty()) throw ParseError("empty coefficient list");
  return QPoly({}, std::move(v));
}

Rational resultant(const QPoly& f0, const QPoly& g0) {
  if (f0.is_zero() || g0.is_zero()) return Rational(0);
  QPoly f = f0, g = g0;
  Rational res(1);
  while (true) {
    long m = f.degree(), n = g.degree();
    if (n == 0) return res * g.leading().pow(static_cast<unsigned>(m));
    // Res(f, g) = (-1)^{mn} Res(g, f); Res(g, f) = lc(g)^{m - deg r} Res(g, r), r = f mod g.
    auto r = poly_divrem(f, g).remainder;
    if (r.is_zero()) return Rational(0);
    if ((m * n) % 2 == 1) res = -res;
    res *= g.leading().pow(static_cast<unsigned>(m - r.degree()));
    f = std::move(g);
    g = std::move(r);
  }
}

std::vector<Integer> primitive_integer_form(const QPoly& h) {
  Integer l = 1;
  for (const auto& c : h.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
  std::vector<Integer> v;
  Integer g = 0;
  for (const auto& c : h.coeffs()) {
    Integer n = c.num() * (l / c.den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    v.push_back(n);
  }
  if (g != 0)
    for (auto& n : v) n /= g;
  if (!v.empty() && v.back() < 0)
    for (auto& n : v) n = -n;
  return v;
}

}  // namespace cubtors
