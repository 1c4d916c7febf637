#include <doctest.h>

#include <random>

#include "cubtors/ground.hpp"
#include "support.hpp"

using namespace cubtors;
using testing_support::catalog;
using testing_support::field;
using testing_support::qpoly;

namespace {

QPoly qpoly_r(std::vector<Rational> c) { return QPoly(RationalsTag{}, std::move(c)); }

const QCurve& qc(const std::string& label) { return *catalog().curve(label).over_q; }

QPoly random_poly(std::mt19937_64& rng, int degree, long range) {
  std::uniform_int_distribution<long> c(-range, range);
  std::vector<long> v(static_cast<std::size_t>(degree) + 1);
  for (auto& a : v) a = c(rng);
  if (v.back() == 0) v.back() = 1;
  return qpoly(v);
}

}  // namespace

TEST_CASE("psi_9 factors quoted for X1(2,10) and X1(14) divide exactly") {
  QPoly psi = division_poly(qc("X1_2_10"), 9).f;
  CHECK(poly_divrem(psi, qpoly({-1, 1})).remainder.is_zero());
  QPoly c3 = qpoly_r({Rational(1, 3), Rational(1, 3), Rational(7, 3), Rational(1)});
  CHECK(poly_divrem(psi, c3).remainder.is_zero());

  QPoly psi14 = division_poly(qc("X1_14"), 9).f;
  CHECK(poly_divrem(psi14, qpoly_r({Rational(1), Rational(-1), Rational(1, 3), Rational(1)})).remainder.is_zero());
  CHECK(poly_divrem(psi14, qpoly({1, -1, -2, 1})).remainder.is_zero());
}

TEST_CASE("division by one and the division identity") {
  std::mt19937_64 rng(17);
  QPoly g = random_poly(rng, 7, 9);
  auto dr = poly_divrem(g, qpoly({1}));
  CHECK(dr.quotient == g);
  CHECK(dr.remainder.is_zero());
  for (int i = 0; i < 60; ++i) {
    QPoly a = random_poly(rng, 3 + i % 9, 40), b = random_poly(rng, 1 + i % 5, 40);
    auto [q, r] = poly_divrem(a, b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
  }
}

TEST_CASE("gcd examples") {
  CHECK(poly_gcd(qpoly({-1, 0, 1}), qpoly({-1, 1})) == qpoly({-1, 1}));
  QPoly h = qpoly({1, 0, -1, 1});
  CHECK(poly_gcd(h, h.derivative()) == qpoly({1}));
  CHECK(poly_gcd(QPoly(RationalsTag{}), qpoly({4, 2})) == qpoly({2, 1}));
}

TEST_CASE("rational roots") {
  auto r = rational_roots(division_poly(qc("X1_2_10"), 9).f);
  CHECK(std::find(r.begin(), r.end(), Rational(1)) != r.end());
  auto r14 = rational_roots(division_poly(qc("X1_14"), 9).f);
  CHECK(std::find(r14.begin(), r14.end(), Rational(0)) != r14.end());
  CHECK(rational_roots(qpoly({1, 0, 1})).empty());
  // Oracle: roots planted by construction.
  QPoly planted = qpoly_r({Rational(-3, 2), Rational(1)}) * qpoly_r({Rational(5, 7), Rational(1)}) * qpoly({1, 0, 1});
  auto pr = rational_roots(planted);
  REQUIRE(pr.size() == 2);
  CHECK(pr[0] == Rational(-5, 7));
  CHECK(pr[1] == Rational(3, 2));
}

TEST_CASE("roots in cubic fields") {
  auto k4 = field("K4");
  auto own = roots_in_field(k4->defining_poly(), k4);
  CHECK(own.complete);
  CHECK(own.roots.size() == 3);
  CHECK(std::find(own.roots.begin(), own.roots.end(), k4->alpha()) != own.roots.end());
  for (const auto& x : own.roots) CHECK(k4->defining_poly().eval_in(x, k4->element(0), [&](const Rational& c) { return k4->element(c); }).is_zero());

  CHECK_FALSE(roots_in_field(qpoly({1, -1, -2, 1}), k4).roots.empty());

  auto none = roots_in_field(qpoly({1, 0, 1}), field("K1"));
  CHECK(none.roots.empty());
  CHECK(none.complete);
}

TEST_CASE("rational roots appear among the roots in every field") {
  std::mt19937_64 rng(4);
  for (const char* label : {"K1", "K4", "K6"}) {
    for (int i = 0; i < 3; ++i) {
      std::uniform_int_distribution<long> n(-9, 9), d(1, 5);
      Rational a(Integer(n(rng)), Integer(d(rng))), b(Integer(n(rng)), Integer(d(rng)) + 5);
      QPoly h = qpoly_r({-a, Rational(1)}) * qpoly_r({-b, Rational(1)}) * qpoly({2, 0, 1});
      auto rq = rational_roots(h);
      auto rk = roots_in_field(h, field(label));
      for (const auto& r : rq) {
        auto e = field(label)->element(r);
        CHECK(std::find(rk.roots.begin(), rk.roots.end(), e) != rk.roots.end());
      }
    }
  }
}

TEST_CASE("degree certificates") {
  QPoly psi3 = division_poly(qc("X1_15"), 3).f;
  CHECK(psi3 == qpoly({1, 3, 3, 5, 3}));
  auto c = factor_degree_sets(psi3);
  CHECK(c.irreducible_certified);
  CHECK(psi3.degree() == 4);

  auto q = factor_degree_sets(qpoly({-1, 0, 0, 0, 1}));
  CHECK(q.possible_factor_degrees.count(1) == 1);
  CHECK(q.certified_no_factor_up_to == 0);

  // x^2 + 1 splits mod 5 and stays irreducible mod 7.
  CHECK_FALSE(factor_degree_sets(qpoly({1, 0, 1}), 1).irreducible_certified);
  CHECK(factor_degree_sets(qpoly({1, 0, 1}), 2).irreducible_certified);
}

TEST_CASE("certificates are sound on products with known factor degrees") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 25; ++i) {
    int d1 = 1 + i % 4, d2 = 2 + i % 5;
    QPoly g1 = random_poly(rng, d1, 12), g2 = random_poly(rng, d2, 12);
    QPoly g = g1 * g2;
    if (!is_squarefree(g)) continue;
    auto cert = factor_degree_sets(g, 4);
    CHECK(cert.possible_factor_degrees.count(d1) == 1);
    CHECK(cert.possible_factor_degrees.count(d2) == 1);
    CHECK(cert.certified_no_factor_up_to < std::min(d1, d2));
    auto lifted = factor_degree_sets(g, 4, d1 + d2);
    CHECK(lifted.certified_no_factor_up_to < std::min(d1, d2));
  }
}
