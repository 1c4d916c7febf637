#include <doctest.h>

#include "cubtors/reduction.hpp"
#include "support.hpp"

using namespace cubtors;
using testing_support::catalog;
using testing_support::field;
using testing_support::qcurve;

namespace {

FFCurve family_at(const std::string& label, long t, const FFRef& f) {
  return reduce_curve(catalog().family(label).at(Rational(t)), f);
}

}  // namespace

TEST_CASE("prime splitting") {
  auto s = split_prime(*field("K4"), 5);
  REQUIRE(s.factors.size() == 1);
  CHECK(s.factors[0].degree == 3);
  CHECK(s.factors[0].field->size() == 125);
  auto s1 = split_prime(*field("K1"), 5);
  REQUIRE(s1.factors.size() == 2);
  CHECK(s1.factors[0].degree == 1);
  CHECK(s1.factors[1].degree == 2);
  CHECK_THROWS_AS(split_prime(*field("K1"), 23), RamifiedOrIndexPrime);
}

TEST_CASE("reduction of curves") {
  const auto& E = *catalog().curve("K4_14a").over_k;
  auto s = split_prime(*E.context(), 29);
  for (const auto& pf : s.factors) CHECK_NOTHROW(reduce_curve(E, pf));
  for (long t = 0; t < 5; ++t) CHECK_NOTHROW(family_at("FAM4", t, FiniteField::prime_field(5)));
  CHECK_THROWS_AS(reduce_curve(qcurve(0, 0, 0, 0, 7), FiniteField::prime_field(7)), BadReduction);
}

TEST_CASE("point counts") {
  auto f5 = FiniteField::prime_field(5);
  for (long t = 0; t < 5; ++t) CHECK(count_points(family_at("FAM4", t, f5)) == 4);
  auto f125 = FiniteField::extension(5, 3);
  for (long t = 0; t < 5; ++t) CHECK(count_points(family_at("FAM5", t, f125)) == 140);
  CHECK(count_points(reduce_curve(qcurve(0, 0, 0, 1, 0), f5)) == 4);
}

TEST_CASE("parallel, serial and reference counts agree") {
  std::mt19937_64 rng(77);
  for (auto f : {FiniteField::prime_field(101), FiniteField::extension(7, 2), FiniteField::extension(5, 3),
                 FiniteField::extension(2, 3)}) {
    for (int i = 0; i < 4; ++i) {
      FFCurve E = testing_support::random_ff_curve(f, rng);
      auto n = count_points_reference(E);
      CHECK(count_points(E, false) == n);
      CHECK(count_points(E, true) == n);
      CHECK(all_points(E).size() == n);
    }
  }
}

TEST_CASE("group structures") {
  auto f5 = FiniteField::prime_field(5);
  CHECK(group_structure(reduce_curve(qcurve(0, 0, 0, 1, 0), f5)) == GroupStructure{2, 2});
  CHECK(group_structure(reduce_curve(qcurve(0, -1, -1, 0, 0), FiniteField::prime_field(2))) == GroupStructure{1, 5});
  for (long t = 0; t < 5; ++t) CHECK(group_structure(family_at("FAM3_1", t, f5)) == GroupStructure{1, 3});
}

TEST_CASE("Frobenius recurrence") {
  CHECK(frobenius_counts(5, 5, 3) == 140);
  CHECK(frobenius_counts(3, 2, 2) == 9);
  CHECK(frobenius_counts(7, 5, 1) == 7);
  // Against enumeration for every catalog curve over Q at small p.
  for (const auto& rec : catalog().curves) {
    if (!rec.over_q) continue;
    for (std::uint64_t p : {3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
      std::optional<FFCurve> reduced;
      try {
        reduced = reduce_curve(*rec.over_q, FiniteField::prime_field(p));
      } catch (const Error&) {
        continue;  // bad or non-integral reduction
      }
      const FFCurve& Ep = *reduced;
      auto n1 = count_points(Ep);
      for (int k = 2; k <= 3; ++k) {
        auto ext = FiniteField::extension(p, k);
        std::array<FFElement, 5> a{ext->from_prime(Ep.a1().index()), ext->from_prime(Ep.a2().index()),
                                   ext->from_prime(Ep.a3().index()), ext->from_prime(Ep.a4().index()),
                                   ext->from_prime(Ep.a6().index())};
        FFCurve Ek(ext, a);
        CHECK(frobenius_counts(n1, p, k) == Integer(static_cast<unsigned long>(count_points(Ek))));
      }
    }
  }
}

TEST_CASE("torsion bounds") {
  const auto& k1 = field("K1");
  auto b = torsion_bound(base_change(*catalog().curve("X1_11").over_q, k1));
  CHECK(b.B % 5 == 0);
  CHECK(b.B < 55);
  CHECK(torsion_bound(*catalog().curve("K4_14a").over_k).B % 14 == 0);
  for (const auto& rec : catalog().curves) {
    if (!rec.expected_torsion) continue;
    long order = rec.expected_torsion->first * rec.expected_torsion->second;
    long B = rec.over_q ? torsion_bound(*rec.over_q).B : torsion_bound(*rec.over_k).B;
    CHECK_MESSAGE(B % order == 0, rec.label);
  }
}

TEST_CASE("Hasse bound on every count so far") {
  auto audit = count_audit();
  CHECK(audit.counts > 0);
  CHECK(audit.hasse_failures == 0);
  CHECK(within_hasse(140, 125));
  CHECK_FALSE(within_hasse(200, 125));
}
