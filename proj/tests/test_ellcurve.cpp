#include <doctest.h>

#include "cubtors/ground.hpp"
#include "cubtors/reduction.hpp"
#include "support.hpp"

using namespace cubtors;
using testing_support::catalog;
using testing_support::qcurve;

namespace {

const KCurve& kc(const std::string& label) { return *catalog().curve(label).over_k; }

CurvePoint<FieldElement> origin(const KCurve& E) {
  const auto& k = E.a1().field();
  return {k->element(0), k->element(0)};
}

}  // namespace

TEST_CASE("curve construction") {
  CHECK(*kc("K4_14a").j() == kc("K4_14a").from_int(16581375));
  CHECK(qcurve(0, 0, 0, 1, 0).disc() == Rational(-64));
  CHECK_THROWS_AS(qcurve(0, 0, 0, 0, 0), SingularCurve);
}

TEST_CASE("addition and multiplication on X1(11)") {
  QCurve E = qcurve(0, -1, -1, 0, 0);
  CurvePoint<Rational> P(0, 0), Q(1, 0);
  CHECK(E.on_curve(P));
  CHECK(E.on_curve(Q));
  CHECK(add_points(E, P, CurvePoint<Rational>::infinity()) == P);
  CHECK(add_points(E, P, negate(E, P)).is_infinity());
  // Repeated addition oracle.
  CurvePoint<Rational> acc;
  for (int i = 1; i <= 5; ++i) {
    acc = add_points(E, acc, P);
    CHECK(acc.is_infinity() == (i == 5));
  }
  CHECK(add_points(E, P, Q).is_infinity() == false);
  CHECK(scalar_mul(E, 0, P).is_infinity());
  CHECK(point_order(E, P, 100) == 5);
  CHECK(point_order(E, CurvePoint<Rational>::infinity(), 10) == 1);
}

TEST_CASE("marked points over cubic fields") {
  const KCurve& E = kc("K4_14a");
  auto P = origin(E);
  CHECK(scalar_mul(E, 14, P).is_infinity());
  CHECK_FALSE(scalar_mul(E, 7, P).is_infinity());
  CHECK_FALSE(scalar_mul(E, 2, P).is_infinity());
  CHECK(scalar_mul(kc("K3_13"), 13, origin(kc("K3_13"))).is_infinity());
  CHECK(point_order(kc("K2_14"), origin(kc("K2_14")), 100) == 14);
}

TEST_CASE("infinite order witness over K1") {
  const auto& k = testing_support::field("K1");
  KCurve E = base_change(qcurve(0, -1, 0, 1, 0), k);
  auto a = k->alpha();
  CurvePoint<FieldElement> P(k->element(2) * a * a - k->element(1), k->element(2) * a * a - k->element(2) * a - k->element(3));
  REQUIRE(E.on_curve(P));
  auto B = torsion_bound(E);
  CHECK_FALSE(point_order_with_bound(E, P, B.B).has_value());
}

TEST_CASE("division polynomials") {
  QCurve E = *catalog().curve("X1_15").over_q;
  CHECK(division_poly(E, 1).f == testing_support::qpoly({1}));
  CHECK(division_poly(E, 3).f == testing_support::qpoly({1, 3, 3, 5, 3}));
  for (long n = 3; n <= 13; n += 2) CHECK(division_poly(E, n).f.degree() == (n * n - 1) / 2);
}

TEST_CASE("psi_n vanishes exactly on the n-torsion over small fields") {
  std::mt19937_64 rng(1);
  long pairs = 0;
  for (auto f : {FiniteField::prime_field(5), FiniteField::prime_field(7), FiniteField::prime_field(11)}) {
    for (int c = 0; c < 6; ++c) {
      FFCurve E = testing_support::random_ff_curve(f, rng);
      auto polys = division_polys(E, 12);
      for (const auto& P : all_points(E)) {
        if (P.is_infinity()) continue;
        for (long n = 1; n <= 12; ++n) {
          DivisionPoly<FFElement> d{n, polys[static_cast<std::size_t>(n)], n % 2 == 0};
          CHECK(psi_at(E, d, P).is_zero() == scalar_mul(E, n, P).is_infinity());
          ++pairs;
        }
      }
    }
  }
  CHECK(pairs > 0);
}

TEST_CASE("group law: associativity, commutativity, linearity") {
  std::mt19937_64 rng(12);
  for (auto f : {FiniteField::prime_field(13), FiniteField::extension(3, 2), FiniteField::extension(2, 3)}) {
    FFCurve E = testing_support::random_ff_curve(f, rng);
    auto pts = all_points(E);
    std::uniform_int_distribution<std::size_t> pick(0, pts.size() - 1);
    for (int i = 0; i < 60; ++i) {
      const auto &P = pts[pick(rng)], &Q = pts[pick(rng)], &R = pts[pick(rng)];
      CHECK(add_points(E, add_points(E, P, Q), R) == add_points(E, P, add_points(E, Q, R)));
      CHECK(add_points(E, P, Q) == add_points(E, Q, P));
      long m = i % 7, n = i % 5 + 1;
      CHECK(scalar_mul(E, m + n, P) == add_points(E, scalar_mul(E, m, P), scalar_mul(E, n, P)));
    }
  }
  // On catalog points over cubic fields.
  const KCurve& E = kc("K3_11");
  auto P = origin(E);
  auto Q = scalar_mul(E, 3, P), R = scalar_mul(E, 7, P);
  CHECK(add_points(E, add_points(E, P, Q), R) == add_points(E, P, add_points(E, Q, R)));
  CHECK(add_points(E, Q, R) == scalar_mul(E, 10, P));
}

TEST_CASE("invariants: 1728 disc = c4^3 - c6^2 and j under integral rescaling") {
  for (const auto& rec : catalog().curves) {
    if (rec.over_q) {
      const auto& E = *rec.over_q;
      CHECK(Rational(1728) * E.disc() == E.c4() * E.c4() * E.c4() - E.c6() * E.c6());
      for (long u : {2L, -3L}) {
        Rational U(u);
        QCurve F(RationalsTag{}, {U * E.a1(), U * U * E.a2(), U.pow(3) * E.a3(), U.pow(4) * E.a4(), U.pow(6) * E.a6()});
        CHECK(*F.j() == *E.j());
      }
    } else {
      const auto& E = *rec.over_k;
      CHECK(E.from_int(1728) * E.disc() == E.c4() * E.c4() * E.c4() - E.c6() * E.c6());
    }
  }
}

TEST_CASE("preimages under multiplication match brute force") {
  std::mt19937_64 rng(31);
  for (auto f : {FiniteField::prime_field(7), FiniteField::prime_field(11)}) {
    FFCurve E = testing_support::random_ff_curve(f, rng);
    auto pts = all_points(E);
    for (long l : {2L, 3L}) {
      CHECK(preimage_poly(E, l, f->from_int(0)).degree() == l * l);
      for (const auto& Q : pts) {
        if (Q.is_infinity()) continue;
        auto roots = ff_roots(preimage_poly(E, l, Q.x()));
        std::vector<FFElement> brute;
        for (const auto& X : pts) {
          if (X.is_infinity()) continue;
          auto lX = scalar_mul(E, l, X);
          if (!lX.is_infinity() && lX.x() == Q.x() &&
              std::find(brute.begin(), brute.end(), X.x()) == brute.end())
            brute.push_back(X.x());
        }
        // Every x over F_q with a point above it is a root; roots with no
        // rational point above them are allowed.
        for (const auto& x : brute) CHECK(std::find(roots.begin(), roots.end(), x) != roots.end());
      }
    }
  }
}

TEST_CASE("4-torsion from the 2-torsion preimage on y^2 = x^3 + x") {
  QCurve E = qcurve(0, 0, 0, 1, 0);
  auto pre = rational_roots(preimage_poly(E, 2, Rational(0)));
  auto quarter = rational_roots(division_poly(E, 4).f);
  for (const auto& x : pre) CHECK(std::find(quarter.begin(), quarter.end(), x) != quarter.end());
  CHECK(pre.size() == 2);  // x = 1 and x = -1
}

TEST_CASE("y-lifts") {
  auto x11 = lift_x(qcurve(0, -1, -1, 0, 0), Rational(0));
  REQUIRE(x11.roots.size() == 2);
  CHECK((x11.roots[0] == CurvePoint<Rational>(0, 0) || x11.roots[1] == CurvePoint<Rational>(0, 0)));
  CHECK((x11.roots[0] == CurvePoint<Rational>(0, 1) || x11.roots[1] == CurvePoint<Rational>(0, 1)));
}
