#include "cubtors/torsion.hpp"

#include <algorithm>
#include <sstream>

#include "cubtors/errors.hpp"

namespace cubtors {

std::string to_string(TorsionStatus s) { return s == TorsionStatus::Certified ? "Certified" : "LowerBoundOnly"; }

std::string to_string(Answer a) {
  switch (a) {
    case Answer::Yes: return "Yes";
    case Answer::No: return "No";
    default: return "Unknown";
  }
}

bool canonical_point_less(const CurvePoint<Rational>& a, const CurvePoint<Rational>& b) {
  if (a.is_infinity() || b.is_infinity()) return a.is_infinity() && !b.is_infinity();
  if (a.x() != b.x()) return a.x() < b.x();
  return a.y() < b.y();
}

bool canonical_point_less(const CurvePoint<FieldElement>& a, const CurvePoint<FieldElement>& b) {
  if (a.is_infinity() || b.is_infinity()) return a.is_infinity() && !b.is_infinity();
  if (!(a.x() == b.x())) return embedding1_less(a.x(), b.x());
  return embedding1_less(a.y(), b.y());
}

KCurve base_change(const QCurve& E, const FieldRef& k) {
  return base_change<FieldElement>(E, k, [&](const Rational& a) { return k->element(a); });
}

namespace {

int valuation(long n, long p) {
  int e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

long ipow(long b, int e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Largest prime possible in the torsion of a curve over Q (Mazur) or over a
// cubic field (Parent).
long largest_possible_prime(const QCurve&) { return 7; }
long largest_possible_prime(const KCurve&) { return 13; }

template <class F>
void add_unique(std::vector<CurvePoint<F>>& v, const CurvePoint<F>& P) {
  if (std::find(v.begin(), v.end(), P) == v.end()) v.push_back(P);
}

template <class F>
PrimaryPart<F> primary_impl(const WeierstrassCurve<F>& E, long ell, int max_exponent, const TorsionConfig& cfg) {
  PrimaryPart<F> part;
  part.ell = ell;
  if (max_exponent < 1) return part;

  // Level 1: the l-torsion from the 2-torsion cubic or psi_l.
  Polynomial<F> h = ell == 2 ? E.two_torsion_poly() : division_poly(E, ell).f;
  auto xs = roots_of(h, cfg.roots);
  part.complete = part.complete && xs.complete;
  std::vector<CurvePoint<F>> level;
  for (const auto& x : xs.roots) {
    auto pts = lift_x(E, x, cfg.roots);
    part.complete = part.complete && pts.complete;
    for (const auto& P : pts.roots)
      if (has_exact_order(E, P, ell)) add_unique(level, P);
  }
  {
    std::ostringstream os;
    os << "l=" << ell << " level 1: deg " << h.degree() << ", " << xs.roots.size() << " x-roots, " << level.size()
       << " points";
    part.log.push_back(os.str());
  }

  // Ascent: solve x([l]X) = x(Q) for each Q of the current level.
  int j = 1;
  while (!level.empty()) {
    std::sort(level.begin(), level.end(), [](const auto& a, const auto& b) { return canonical_point_less(a, b); });
    part.levels.push_back(level);
    if (j >= max_exponent) break;
    std::vector<CurvePoint<F>> next;
    std::vector<F> done_x;
    for (const auto& Q : level) {
      if (std::find(done_x.begin(), done_x.end(), Q.x()) != done_x.end()) continue;
      done_x.push_back(Q.x());
      auto pre = roots_of(preimage_poly(E, ell, Q.x()), cfg.roots);
      part.complete = part.complete && pre.complete;
      for (const auto& x : pre.roots) {
        auto pts = lift_x(E, x, cfg.roots);
        part.complete = part.complete && pts.complete;
        for (const auto& X : pts.roots) {
          auto lX = scalar_mul(E, ell, X);
          if (std::find(level.begin(), level.end(), lX) != level.end()) add_unique(next, X);
        }
      }
    }
    ++j;
    std::ostringstream os;
    os << "l=" << ell << " level " << j << ": " << next.size() << " points";
    part.log.push_back(os.str());
    level = std::move(next);
  }

  const long order = part.order();
  const long exponent = ipow(ell, static_cast<int>(part.levels.size()));
  part.n2 = exponent;
  part.n1 = order / exponent;
  if (part.n1 * part.n2 != order) {
    std::ostringstream os;
    os << "inconsistent primary part sizes for l=" << ell << ": order " << order << ", levels";
    for (const auto& lv : part.levels) os << " " << lv.size();
    for (const auto& l : part.log) os << "; " << l;
    throw PreconditionFailed(os.str());
  }
  return part;
}

template <class F>
CurvePoint<F> sum_points(const WeierstrassCurve<F>& E, const std::vector<CurvePoint<F>>& pts) {
  CurvePoint<F> acc;
  for (const auto& P : pts) acc = add_points(E, acc, P);
  return acc;
}

// A point of order n1 independent of the cyclic subgroup generated by G
// (n1 = l here, the only case the Weil pairing allows over Q and cubic fields).
template <class F>
std::optional<CurvePoint<F>> complement_generator(const WeierstrassCurve<F>& E, const PrimaryPart<F>& part,
                                                  const CurvePoint<F>& G) {
  if (part.n1 == 1) return std::nullopt;
  if (part.n1 != part.ell) return std::nullopt;
  CurvePoint<F> base = scalar_mul(E, part.n2 / part.ell, G);
  std::vector<CurvePoint<F>> cyclic;
  for (long k = 1; k < part.ell; ++k) cyclic.push_back(scalar_mul(E, k, base));
  for (const auto& T : part.levels.front())
    if (std::find(cyclic.begin(), cyclic.end(), T) == cyclic.end()) return T;
  return std::nullopt;
}

template <class F>
TorsionResult<F> torsion_impl(const WeierstrassCurve<F>& E, const TorsionConfig& cfg) {
  TorsionResult<F> res;
  auto tb = refine_torsion_bound(E, cfg.bound_primes, cfg.largest_expected_prime, cfg.extra_bound_primes);
  res.bound_B = tb.B;
  res.primes_used = tb.primes_used;
  for (const auto& l : tb.log) res.log.push_back("bound " + l);
  res.log.push_back("B = " + std::to_string(tb.B));

  std::vector<CurvePoint<F>> main_parts, second_parts;
  bool complete = true;
  for (auto [ell, e] : detail::factor_small(tb.B)) {
    if (ell > largest_possible_prime(E)) {
      res.log.push_back("l=" + std::to_string(ell) + " excluded: no such torsion prime over this field degree");
      continue;
    }
    auto part = primary_impl(E, ell, e, cfg);
    complete = complete && part.complete;
    for (auto& l : part.log) res.log.push_back(std::move(l));
    if (part.levels.empty()) continue;
    const CurvePoint<F>& G = part.levels.back().front();
    main_parts.push_back(G);
    res.n2 *= part.n2;
    res.n1 *= part.n1;
    if (auto T = complement_generator(E, part, G)) second_parts.push_back(*T);
  }
  CurvePoint<F> G = sum_points(E, main_parts);
  if (!has_exact_order(E, G, res.n2)) throw PreconditionFailed("assembled generator has the wrong order");
  res.generators.push_back(G);
  if (res.n1 > 1) {
    CurvePoint<F> T = sum_points(E, second_parts);
    if (!second_parts.empty() && has_exact_order(E, T, res.n1)) res.generators.push_back(T);
  }
  if ((res.n1 * res.n2) != 0 && tb.B % (res.n1 * res.n2) != 0)
    throw PreconditionFailed("torsion order does not divide the reduction bound");
  res.status = complete ? TorsionStatus::Certified : TorsionStatus::LowerBoundOnly;
  return res;
}

template <class F>
OrderQuery<F> order_query_impl(const WeierstrassCurve<F>& E, long n, const TorsionConfig& cfg) {
  OrderQuery<F> q;
  if (n < 1) throw PreconditionFailed("order must be positive");
  if (n == 1) return {Answer::Yes, CurvePoint<F>::infinity()};
  auto tb = refine_torsion_bound(E, cfg.bound_primes, cfg.largest_expected_prime, cfg.extra_bound_primes);
  std::vector<CurvePoint<F>> parts;
  bool complete = true;
  for (auto [ell, e] : detail::factor_small(n)) {
    int avail = valuation(tb.B, ell);
    if (avail < e) return {Answer::No, std::nullopt};
    auto part = primary_impl(E, ell, e, cfg);
    complete = complete && part.complete;
    if (static_cast<int>(part.levels.size()) < e) return {complete ? Answer::No : Answer::Unknown, std::nullopt};
    parts.push_back(part.levels[static_cast<std::size_t>(e - 1)].front());
  }
  CurvePoint<F> P = sum_points(E, parts);
  if (!has_exact_order(E, P, n)) throw PreconditionFailed("assembled point has the wrong order");
  return {Answer::Yes, P};
}

}  // namespace

PrimaryPart<Rational> primary_part(const QCurve& E, long ell, int max_exponent, const TorsionConfig& cfg) {
  return primary_impl(E, ell, max_exponent, cfg);
}
PrimaryPart<FieldElement> primary_part(const KCurve& E, long ell, int max_exponent, const TorsionConfig& cfg) {
  return primary_impl(E, ell, max_exponent, cfg);
}

TorsionResult<Rational> torsion_subgroup(const QCurve& E, const TorsionConfig& cfg) { return torsion_impl(E, cfg); }
TorsionResult<FieldElement> torsion_subgroup(const KCurve& E, const TorsionConfig& cfg) {
  return torsion_impl(E, cfg);
}

OrderQuery<Rational> has_point_of_order(const QCurve& E, long n, const TorsionConfig& cfg) {
  return order_query_impl(E, n, cfg);
}
OrderQuery<FieldElement> has_point_of_order(const KCurve& E, long n, const TorsionConfig& cfg) {
  return order_query_impl(E, n, cfg);
}

Sylow2Comparison sylow2_compare(const QCurve& E, const FieldRef& k, const TorsionConfig& cfg) {
  Sylow2Comparison c;
  auto bq = refine_torsion_bound(E, cfg.bound_primes, cfg.largest_expected_prime, cfg.extra_bound_primes);
  auto pq = primary_impl(E, 2, valuation(bq.B, 2), cfg);
  if (pq.order() == 1) throw PreconditionFailed("the rational 2-Sylow subgroup is trivial");
  KCurve EK = base_change(E, k);
  auto bk = refine_torsion_bound(EK, cfg.bound_primes, cfg.largest_expected_prime, cfg.extra_bound_primes);
  auto pk = primary_impl(EK, 2, valuation(bk.B, 2), cfg);
  c.q_n1 = pq.n1;
  c.q_n2 = pq.n2;
  c.k_n1 = pk.n1;
  c.k_n2 = pk.n2;
  c.complete = pq.complete && pk.complete;
  c.same = c.q_n1 == c.k_n1 && c.q_n2 == c.k_n2;
  return c;
}

bool sylow2_check(const QCurve& E, const FieldRef& k, const TorsionConfig& cfg) {
  return sylow2_compare(E, k, cfg).same;
}

}  // namespace cubtors
