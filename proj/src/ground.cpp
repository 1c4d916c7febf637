#include "cubtors/ground.hpp"

namespace cubtors {

RootList<Rational> roots_of(const QPoly& h, const FieldRootConfig&) {
  RootList<Rational> out;
  if (h.degree() < 1) return out;
  out.roots = rational_roots(h);
  return out;
}

RootList<FieldElement> roots_of(const KPoly& h, const FieldRootConfig& config) {
  RootList<FieldElement> out;
  if (h.degree() < 1) return out;
  KPoly g = is_squarefree_k(h) ? h : squarefree_part(h);
  auto found = roots_in_field(g, config);
  out.roots = std::move(found.roots);
  out.complete = found.complete;
  return out;
}

RootList<FFElement> roots_of(const FFPoly& h, const FieldRootConfig&) {
  RootList<FFElement> out;
  if (h.degree() < 1) return out;
  out.roots = ff_roots(h);
  return out;
}

}  // namespace cubtors
