#include <doctest.h>

#include "cubtors/torsion.hpp"
#include "support.hpp"

using namespace cubtors;
using testing_support::catalog;
using testing_support::field;
using testing_support::qcurve;

namespace {

const QCurve& qc(const std::string& label) { return *catalog().curve(label).over_q; }
const KCurve& kc(const std::string& label) { return *catalog().curve(label).over_k; }

template <class F>
void check_result_invariants(const WeierstrassCurve<F>& E, const TorsionResult<F>& r, bool cubic) {
  CHECK(r.n2 % r.n1 == 0);
  if (cubic) CHECK(r.n1 <= 2);
  CHECK(r.bound_B % (r.n1 * r.n2) == 0);
  REQUIRE(!r.generators.empty());
  CHECK(has_exact_order(E, r.generators[0], r.n2));
  if (r.generators.size() > 1) CHECK(has_exact_order(E, r.generators[1], r.n1));
}

}  // namespace

TEST_CASE("torsion over cubic fields") {
  auto r = torsion_subgroup(base_change(qc("X1_11"), field("K3")));
  CHECK(r.n1 == 1);
  CHECK(r.n2 == 10);
  CHECK(r.status == TorsionStatus::Certified);
  check_result_invariants(base_change(qc("X1_11"), field("K3")), r, true);

  auto r14 = torsion_subgroup(base_change(qc("X1_14"), field("K4")));
  CHECK(r14.n2 == 18);
  CHECK(r14.n1 == 1);
  CHECK(r14.status == TorsionStatus::Certified);

  KCurve E = base_change(qcurve(0, 0, 0, 1, -10), field("K4"));
  auto r2 = torsion_subgroup(E);
  CHECK(r2.n1 == 1);
  CHECK(r2.n2 == 2);
  check_result_invariants(E, r2, true);
}

TEST_CASE("has_point_of_order") {
  auto y15 = has_point_of_order(kc("K3_15"), 15);
  CHECK(y15.answer == Answer::Yes);
  REQUIRE(y15.point);
  CHECK(has_exact_order(kc("K3_15"), *y15.point, 15));
  CHECK(has_point_of_order(kc("K5_16"), 16).answer == Answer::Yes);
  CHECK(has_point_of_order(base_change(qc("X1_15"), field("K1")), 8).answer == Answer::No);
}

TEST_CASE("Sylow 2 stability") {
  for (const char* k : {"K1", "K2", "K3", "K4", "K5", "K6", "K7"}) CHECK(sylow2_check(qc("X1_15"), field(k)));
  CHECK(sylow2_check(qcurve(0, 0, 0, 1, 0), field("K1")));
  CHECK_THROWS_AS(sylow2_check(qc("X1_11"), field("K1")), PreconditionFailed);
}

TEST_CASE("torsion over Q and determinism") {
  auto a = torsion_subgroup(qc("X1_11"));
  auto b = torsion_subgroup(qc("X1_11"));
  CHECK(a.n2 == 5);
  CHECK(a.n1 == b.n1);
  CHECK(a.n2 == b.n2);
  CHECK(a.status == b.status);
  CHECK(a.generators == b.generators);
  check_result_invariants(qc("X1_11"), a, false);

  auto c = torsion_subgroup(kc("K2_2x10"));
  auto d = torsion_subgroup(kc("K2_2x10"));
  CHECK(c.n1 == 2);
  CHECK(c.n2 == 10);
  CHECK(c.generators == d.generators);
  check_result_invariants(kc("K2_2x10"), c, true);
}

TEST_CASE("primary parts hold every point of each level") {
  auto part = primary_part(kc("K3_11"), 11, 1);
  REQUIRE(part.levels.size() == 1);
  CHECK(part.levels[0].size() == 10);
  CHECK(part.complete);
  for (const auto& P : part.levels[0]) CHECK(has_exact_order(kc("K3_11"), P, 11));
}
