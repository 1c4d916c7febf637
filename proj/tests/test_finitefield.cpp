#include <doctest.h>

#include "cubtors/finite_field.hpp"
#include "support.hpp"

using namespace cubtors;

namespace {

FFPoly ffpoly(const FFRef& f, const std::vector<long>& c) { return FFPoly::from_ints(f, c); }

}  // namespace

TEST_CASE("residue fields") {
  CHECK(make_residue_field(5, {1, 1, 0, 1})->size() == 125);  // x^3 + x + 1 has no root mod 5
  auto f8 = make_residue_field(2, {1, 1, 0, 1});
  CHECK(f8->size() == 8);
  CHECK_THROWS_AS(FiniteField::make(5, {1, 0, 1}), ReducibleModulus);  // x^2 - 4 = x^2 + 1 mod 5
}

TEST_CASE("distinct-degree factorization examples") {
  auto f5 = FiniteField::prime_field(5);
  auto d = ff_ddf(ffpoly(f5, {0, -1, 0, 1}));
  REQUIRE(d.size() == 1);
  CHECK(d[0].first == 1);
  CHECK(d[0].second == ffpoly(f5, {0, -1, 0, 1}));

  auto f2 = FiniteField::prime_field(2);
  auto d2 = ff_ddf(ffpoly(f2, {1, 1, 0, 1}));
  REQUIRE(d2.size() == 1);
  CHECK(d2[0].first == 3);

  auto f3 = FiniteField::prime_field(3);
  auto d3 = ff_ddf(ffpoly(f3, {1, 0, 1}));
  REQUIRE(d3.size() == 1);
  CHECK(d3[0].first == 2);
}

TEST_CASE("ddf blocks recombine to h") {
  std::mt19937_64 rng(6);
  for (std::uint64_t p : {3ULL, 5ULL, 11ULL}) {
    auto f = FiniteField::prime_field(p);
    std::uniform_int_distribution<long> c(0, static_cast<long>(p) - 1);
    for (int i = 0; i < 20; ++i) {
      std::vector<long> v(8);
      for (auto& a : v) a = c(rng);
      v.back() = 1;
      FFPoly h = ffpoly(f, v);
      if (!is_squarefree(h)) continue;
      FFPoly prod = ffpoly(f, {1});
      long total = 0;
      for (const auto& [deg, g] : ff_ddf(h)) {
        CHECK(g.degree() % deg == 0);
        total += g.degree();
        prod = prod * g;
      }
      CHECK(total == h.degree());
      CHECK(prod == h);
    }
  }
}

TEST_CASE("quadratic counts") {
  auto f5 = FiniteField::prime_field(5);
  CHECK(ff_quadratic_count(f5->from_int(0), f5->from_int(1)) == 2);
  CHECK(ff_quadratic_count(f5->from_int(0), f5->from_int(2)) == 0);
  auto f2 = FiniteField::prime_field(2);
  CHECK(ff_quadratic_count(f2->from_int(1), f2->from_int(0)) == 2);

  for (auto f : {FiniteField::prime_field(7), FiniteField::extension(2, 3), FiniteField::extension(3, 2)}) {
    for (const auto& a : enumerate(f)) {
      long sum = 0;
      for (const auto& b : enumerate(f)) sum += ff_quadratic_count(a, b);
      CHECK(sum == static_cast<long>(f->size()));
    }
  }
}

TEST_CASE("enumeration") {
  CHECK(enumerate(FiniteField::prime_field(5)).size() == 5);
  CHECK(enumerate(FiniteField::extension(5, 3)).size() == 125);
  CHECK_THROWS_AS(enumerate(FiniteField::extension(1009, 3)), TooLarge);
}

TEST_CASE("Frobenius fixes every element") {
  for (auto f : {FiniteField::extension(2, 3), FiniteField::extension(5, 2), FiniteField::extension(7, 3)})
    for (const auto& x : enumerate(f)) CHECK(x.pow(f->size()) == x);
}
