#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "cubtors/numkernel.hpp"
#include "support.hpp"

using namespace cubtors;
using testing_support::qpoly;

namespace {

using cd = std::complex<long double>;

// Independent oracle: Durand-Kerner in long double.
std::vector<cd> durand_kerner(const std::vector<long double>& c) {
  const std::size_t n = c.size() - 1;
  std::vector<cd> z(n);
  for (std::size_t k = 0; k < n; ++k) z[k] = std::pow(cd(0.4L, 0.9L), static_cast<long double>(k));
  auto h = [&](cd x) {
    cd acc = c.back();
    for (std::size_t i = n; i-- > 0;) acc = acc * x + c[i];
    return acc / c.back();
  };
  for (int it = 0; it < 500; ++it) {
    for (std::size_t k = 0; k < n; ++k) {
      cd d = 1;
      for (std::size_t j = 0; j < n; ++j)
        if (j != k) d *= z[k] - z[j];
      z[k] -= h(z[k]) / d;
    }
  }
  return z;
}

long double dist_to_nearest(const std::vector<cd>& pts, cd z) {
  long double best = 1e300L;
  for (auto p : pts) best = std::min(best, std::abs(p - z));
  return best;
}

cd to_cd(const BigComplex& z) { return {z.re().to_double(), z.im().to_double()}; }

}  // namespace

TEST_CASE("rat_reconstruct recovers exact dyadics and simple fractions") {
  auto half = rat_reconstruct(BigFloat(Rational(1, 2), 128), Integer(10));
  REQUIRE(half);
  CHECK(*half == Rational(1, 2));
  auto third = rat_reconstruct(BigFloat(Rational(1, 3), 128), Integer(100));
  REQUIRE(third);
  CHECK(*third == Rational(1, 3));
}

TEST_CASE("rat_reconstruct rejects sqrt(2) under a small denominator bound") {
  BigFloat s = BigFloat(2, 64).sqrt();
  // Oracle: no p/q with q <= 10 lies within 2^-32 of sqrt(2).
  for (long q = 1; q <= 10; ++q) {
    long p = std::lround(std::sqrt(2.0) * static_cast<double>(q));
    CHECK(std::abs(std::sqrt(2.0L) - static_cast<long double>(p) / q) > std::ldexp(1.0L, -32));
  }
  CHECK_FALSE(rat_reconstruct(s, Integer(10)));
}

TEST_CASE("rat_reconstruct round trip on random fractions") {
  std::mt19937_64 rng(11);
  const Integer B(1000000);
  const long bits = 2 * ilog2(B) + 64 + 2;
  std::uniform_int_distribution<long> num(-5000000, 5000000), den(1, 1000000);
  for (int i = 0; i < 200; ++i) {
    Rational r(Integer(num(rng)), Integer(den(rng)));
    auto back = rat_reconstruct(BigFloat(r, bits), B);
    REQUIRE(back);
    CHECK(*back == r);
  }
}

TEST_CASE("complex_roots of x^2 + 1") {
  auto z = complex_roots(qpoly({1, 0, 1}), 128);
  REQUIRE(z.size() == 2);
  CHECK(z[0].re().abs() < pow2(-100, 128));
  CHECK(std::abs(z[0].im().to_double() + 1) < 1e-30);
  CHECK(std::abs(z[1].im().to_double() - 1) < 1e-30);
}

TEST_CASE("complex_roots of x^3 - x^2 + 1 against an independent solver") {
  auto z = complex_roots(qpoly({1, 0, -1, 1}), 128);
  REQUIRE(z.size() == 3);
  auto oracle = durand_kerner({1, 0, -1, 1});
  for (const auto& r : z) CHECK(dist_to_nearest(oracle, to_cd(r)) < 1e-15L);
  CHECK(z[0].im().is_zero());
  CHECK(std::abs(z[0].re().to_double() + 0.7549) < 1e-4);
  CHECK(std::abs(z[1].re().to_double() - 0.8774) < 1e-4);
  CHECK(std::abs(std::abs(z[1].im().to_double()) - 0.7449) < 1e-4);
  // Forced relations: root sum 1, product -1.
  BigComplex sum = z[0] + z[1] + z[2];
  BigComplex prod = z[0] * z[1] * z[2];
  CHECK((sum - BigComplex(Rational(1), 128)).abs() < pow2(-64, 128));
  CHECK((prod - BigComplex(Rational(-1), 128)).abs() < pow2(-64, 128));
}

TEST_CASE("complex_roots rejects a double root") {
  CHECK_THROWS_AS(complex_roots(qpoly({1, -2, 1}), 128), NotSquarefree);
}

TEST_CASE("elementary symmetric functions reproduce the coefficients") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> coef(-20, 20);
  const long prec = 192;
  for (int trial = 0; trial < 12; ++trial) {
    std::vector<long> c(static_cast<std::size_t>(3 + trial % 6));
    for (auto& a : c) a = coef(rng);
    c.back() = 1;
    QPoly h = qpoly(c);
    if (!is_squarefree(h)) continue;
    auto z = complex_roots(h, prec);
    REQUIRE(z.size() == c.size() - 1);
    // prod (x - z_k), expanded, equals h (monic).
    std::vector<BigComplex> e{BigComplex(Rational(1), prec)};
    for (const auto& r : z) {
      std::vector<BigComplex> next(e.size() + 1, BigComplex(prec));
      for (std::size_t i = 0; i < e.size(); ++i) {
        next[i + 1] = next[i + 1] + e[i];
        next[i] = next[i] - e[i] * r;
      }
      e = std::move(next);
    }
    for (std::size_t i = 0; i < c.size(); ++i) {
      BigFloat err = (e[i] - BigComplex(Rational(c[i]), prec)).abs();
      BigFloat scale(std::max<long>(1, std::abs(c[i])), prec);
      CHECK(err < pow2(-prec / 2, prec) * scale * BigFloat(1 << 10, prec));
    }
    // Conjugate closure for real input.
    for (const auto& r : z) {
      BigFloat best(1000000, prec);
      for (const auto& s : z) {
        BigFloat d = (s - r.conj()).abs();
        if (d < best) best = d;
      }
      CHECK(best < pow2(-prec / 2, prec));
    }
  }
}
