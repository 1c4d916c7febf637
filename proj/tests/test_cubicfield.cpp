#include <doctest.h>

#include <random>

#include "cubtors/cubic_field.hpp"
#include "support.hpp"

using namespace cubtors;
using testing_support::field;

namespace {

FieldRef K1() { return CubicField::make({Integer(1), Integer(0), Integer(-1)}, Integer(-23), "K1"); }

FieldElement random_element(const FieldRef& k, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> n(-30, 30), d(1, 7);
  auto r = [&] { return Rational(Integer(n(rng)), Integer(d(rng))); };
  return k->element(r(), r(), r());
}

}  // namespace

TEST_CASE("make_field accepts Table 1 and the cyclic field with index 2") {
  auto k = K1();
  CHECK(k->poly_disc() == -23);
  auto l2 = CubicField::make({Integer(8), Integer(-10), Integer(-1)}, Integer(961), "L2");
  CHECK(l2->poly_disc() == 3844);
  CHECK(l2->field_disc() == 961);
  CHECK_THROWS_AS(CubicField::make({Integer(0), Integer(-1), Integer(0)}, std::nullopt, "R"), Reducible);
  CHECK_THROWS_AS(CubicField::make({Integer(1), Integer(0), Integer(-1)}, Integer(-22), "K1"), DiscMismatch);
}

TEST_CASE("multiplication and inversion in K1") {
  auto k = K1();
  auto a = k->alpha();
  CHECK(a * (a * a) == a * a - k->element(1));
  CHECK(k->element(1) * a == a);
  CHECK(a * (a - a * a) == k->element(1));
  CHECK(a.inv() == a - a * a);
  CHECK(k->element(1).inv() == k->element(1));
  CHECK_THROWS_AS(k->element(0).inv(), DivisionByZero);
}

TEST_CASE("norm and trace") {
  auto k = K1();
  CHECK(k->alpha().norm() == Rational(-1));
  CHECK(k->alpha().trace() == Rational(1));
  CHECK(k->element(Rational(2, 3)).norm() == Rational(8, 27));
  CHECK(k->element(Rational(2, 3)).trace() == Rational(2));
}

TEST_CASE("field axioms, multiplicative norm and additive trace on random elements") {
  std::mt19937_64 rng(3);
  for (const char* label : {"K1", "K4", "K7"}) {
    auto k = field(label);
    for (int i = 0; i < 40; ++i) {
      auto a = random_element(k, rng), b = random_element(k, rng), c = random_element(k, rng);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * b == b * a);
      CHECK(a * (b + c) == a * b + a * c);
      if (!a.is_zero()) CHECK(a * a.inv() == k->element(1));
      CHECK((a * b).norm() == a.norm() * b.norm());
      CHECK((a + b).trace() == a.trace() + b.trace());
    }
  }
}

TEST_CASE("embeddings: signature and consistency with the norm") {
  Embeddings e4(*field("K4"), 128);
  CHECK(e4.totally_real());
  for (const auto& r : e4.roots()) CHECK(r.im().is_zero());
  Embeddings e1(*field("K1"), 128);
  CHECK_FALSE(e1.totally_real());
  CHECK(e1.roots()[0].im().is_zero());
  CHECK((e1.roots()[1] - e1.roots()[2].conj()).abs() < pow2(-100, 128));
  for (std::size_t i = 0; i < 3; ++i) CHECK((e1.apply(Rational(5), i) - BigComplex(Rational(5), 128)).is_zero());

  std::mt19937_64 rng(8);
  for (const char* label : {"K1", "K4", "K5"}) {
    auto k = field(label);
    for (int i = 0; i < 10; ++i) {
      auto a = random_element(k, rng);
      auto v = embed(a, 256);
      BigComplex p = v[0] * v[1] * v[2];
      BigFloat n(a.norm(), 256);
      BigFloat scale = n.abs() + BigFloat(1, 256);
      CHECK((p - BigComplex(a.norm(), 256)).abs() < pow2(-128, 256) * scale);
    }
  }
}

TEST_CASE("cubic_disc and galois_group on Table 1 and beyond") {
  CHECK(cubic_disc(Integer(1), Integer(-2), Integer(-1)) == 49);
  CHECK(cubic_disc(Integer(-1), Integer(-3), Integer(0)) == 81);
  CHECK(cubic_disc(Integer(2), Integer(-4), Integer(-1)) == 316);
  CHECK(galois_group(Integer(1), Integer(-2), Integer(-1)) == GaloisType::C3);
  CHECK(galois_group(Integer(1), Integer(0), Integer(-1)) == GaloisType::S3);
  CHECK(galois_group(Integer(8), Integer(-10), Integer(-1)) == GaloisType::C3);
}

TEST_CASE("cubic_disc equals -Res(f, f') on random monic cubics") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<long> c(-50, 50);
  for (int i = 0; i < 100; ++i) {
    long c0 = c(rng), c1 = c(rng), c2 = c(rng);
    QPoly f = testing_support::qpoly({c0, c1, c2, 1});
    CHECK(Rational(cubic_disc(Integer(c0), Integer(c1), Integer(c2))) == -resultant(f, f.derivative()));
  }
}

TEST_CASE("every catalog field has a square index") {
  for (const auto& f : testing_support::catalog().fields) {
    CHECK(f.field->poly_disc() % f.field->field_disc() == 0);
    CHECK(is_perfect_square(Integer(f.field->poly_disc() / f.field->field_disc())));
  }
}
