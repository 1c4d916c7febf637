#pragma once

// Root finding in each ground field, behind one overload set, and the y-lift
// of an x-coordinate to points on a curve.

#include <vector>

#include "cubtors/cubic_field.hpp"
#include "cubtors/curve.hpp"
#include "cubtors/finite_field.hpp"
#include "cubtors/poly_roots.hpp"

namespace cubtors {

template <class F>
struct RootList {
  std::vector<F> roots;
  bool complete = true;
};

/// Distinct roots in the coefficient field. Repeated factors are removed
/// first, so any nonzero h is accepted.
RootList<Rational> roots_of(const QPoly& h, const FieldRootConfig& config = {});
RootList<FieldElement> roots_of(const KPoly& h, const FieldRootConfig& config = {});
RootList<FFElement> roots_of(const FFPoly& h, const FieldRootConfig& config = {});

/// Points of E with x-coordinate x0 (zero, one or two of them), each checked
/// to lie on the curve.
template <class F>
RootList<CurvePoint<F>> lift_x(const WeierstrassCurve<F>& E, const F& x0, const FieldRootConfig& config = {}) {
  F A = E.a1() * x0 + E.a3();
  F B = x0 * x0 * x0 + E.a2() * x0 * x0 + E.a4() * x0 + E.a6();
  Polynomial<F> q(E.context(), {-B, A, E.from_int(1)});
  auto ys = roots_of(q, config);
  RootList<CurvePoint<F>> out;
  out.complete = ys.complete;
  for (auto& y : ys.roots) {
    CurvePoint<F> P(x0, y);
    if (!E.on_curve(P)) throw PreconditionFailed("lifted point is not on the curve");
    out.roots.push_back(std::move(P));
  }
  return out;
}

}  // namespace cubtors
