#include <doctest.h>

#include <random>

#include "cubtors/poly_roots.hpp"
#include "support.hpp"

using namespace cubtors;
using testing_support::catalog;
using testing_support::qpoly;

TEST_CASE("zp_factor recovers the polynomial from irreducible factors") {
  std::mt19937_64 rng(2);
  for (std::uint64_t p : {3ULL, 7ULL, 101ULL}) {
    std::uniform_int_distribution<std::uint64_t> c(0, p - 1);
    for (int i = 0; i < 20; ++i) {
      zp::Poly f(9);
      for (auto& a : f) a = c(rng);
      f.back() = 1;
      zp::trim(f);
      if (!zp::is_squarefree(f, p)) continue;
      auto parts = zp_factor(f, p);
      zp::Poly prod = {1};
      for (const auto& g : parts) {
        prod = zp::mul(prod, g, p);
        // Irreducible: the only factor found when factoring it again.
        CHECK(zp_factor(g, p).size() == 1);
      }
      CHECK(prod == zp::monic(f, p));
    }
  }
}

TEST_CASE("count_degree_subsets counts sub-multisets") {
  CHECK(count_degree_subsets({1, 1, 2}, {2}, 100) == 2);  // {1,1}, {2}
  CHECK(count_degree_subsets({3, 3, 3}, {3, 6}, 100) == 6);
  CHECK(count_degree_subsets({1, 1, 1, 1}, {2}, 3) == 3);
}

namespace {

// Reduction of an integral polynomial mod p.
zp::Poly reduce_mod(const QPoly& f, std::uint64_t p) {
  zp::Poly r;
  const Integer P(static_cast<unsigned long>(p));
  for (const auto& c : f.coeffs()) {
    Integer m = c.num() % P;
    if (m < 0) m += P;
    r.push_back(m.get_ui());
  }
  zp::trim(r);
  return r;
}

}  // namespace

TEST_CASE("small_factor_search finds a planted factor and certifies its absence") {
  QPoly a = qpoly({5, 2, 0, 1});          // x^3 + 2x + 5
  QPoly b = qpoly({-3, 1, 0, 0, 7, 0, 2});  // degree 6
  QPoly f = a * b;
  std::uint64_t p = 5;
  while (!zp::is_squarefree(reduce_mod(f, p), p)) p = zp::next_prime(p);
  auto found = small_factor_search(f, {1, 2, 3}, p);
  CHECK(found.searched);
  REQUIRE(found.factor);
  CHECK(found.factor->degree() == 3);
  CHECK(poly_divrem(f, *found.factor).remainder.is_zero());

  auto none = small_factor_search(f, {1, 2}, p);
  CHECK(none.searched);
  CHECK_FALSE(none.factor);
}

TEST_CASE("lifting closes the gap DDF leaves on the psi_9 cofactor") {
  const auto& E = *catalog().curve("X1_2_10").over_q;
  QPoly psi = division_poly(E, 9).f;
  QPoly known = qpoly({-1, 1}) * QPoly(RationalsTag{}, {Rational(1, 3), Rational(1, 3), Rational(7, 3), Rational(1)});
  QPoly cof = poly_divrem(psi, known).quotient;
  auto plain = factor_degree_sets(cof);
  auto lifted = factor_degree_sets(cof, kDefaultDdfPrimes, 3);
  CHECK(lifted.certified_no_factor_up_to >= 3);
  CHECK(lifted.certified_no_factor_up_to >= plain.certified_no_factor_up_to);
}
