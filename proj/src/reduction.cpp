#include "cubtors/reduction.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <sstream>

#include "cubtors/errors.hpp"

namespace cubtors {

namespace {

std::atomic<std::uint64_t> g_counts{0};
std::atomic<std::uint64_t> g_hasse_failures{0};

zp::Poly int_poly_mod(const std::array<Integer, 3>& c, std::uint64_t p) {
  const Integer P(static_cast<unsigned long>(p));
  zp::Poly f;
  for (const auto& a : c) {
    Integer r = a % P;
    if (r < 0) r += P;
    f.push_back(r.get_ui());
  }
  f.push_back(1);
  return f;
}

long largest_prime_factor(long n) {
  long best = 1;
  for (auto [p, e] : detail::factor_small(n)) best = std::max(best, p);
  return best;
}

template <class Curve>
Integer coefficient_denominator(const Curve& E) {
  Integer d = 1;
  for (const auto& a : E.a()) {
    Integer den;
    if constexpr (std::is_same_v<std::decay_t<decltype(a)>, Rational>)
      den = a.den();
    else
      den = a.denominator();
    mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), den.get_mpz_t());
  }
  return d;
}

// Counts over the residue fields above p, or empty when p is not admissible.
std::optional<std::vector<std::pair<std::uint64_t, std::uint64_t>>> counts_at(const QCurve& E, std::uint64_t p,
                                                                               const Integer& den) {
  if (den % static_cast<unsigned long>(p) == 0) return std::nullopt;
  auto field = FiniteField::prime_field(p);
  try {
    auto R = reduce_curve(E, field);
    return std::vector<std::pair<std::uint64_t, std::uint64_t>>{{field->size(), count_points(R)}};
  } catch (const BadReduction&) {
    return std::nullopt;
  }
}

std::optional<std::vector<std::pair<std::uint64_t, std::uint64_t>>> counts_at(const KCurve& E, std::uint64_t p,
                                                                               const Integer& den) {
  const auto& k = *E.context();
  if (k.poly_disc() % static_cast<unsigned long>(p) == 0) return std::nullopt;
  if (den % static_cast<unsigned long>(p) == 0) return std::nullopt;
  auto split = split_prime(k, p);
  std::vector<FFCurve> reduced;
  try {
    for (const auto& f : split.factors) reduced.push_back(reduce_curve(E, f));
  } catch (const BadReduction&) {
    return std::nullopt;
  }
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (const auto& R : reduced)
    if (R.context()->size() <= kEnumerationCap) out.emplace_back(R.context()->size(), count_points(R));
  if (out.empty()) return std::nullopt;
  return out;
}

template <class Curve>
TorsionBound bound_impl(const Curve& E, int prime_count, long largest_expected, int extra_limit) {
  TorsionBound tb;
  const Integer den = coefficient_denominator(E);
  Integer B = 0;
  int extra = 0;
  for (std::uint64_t p = 3;; p = zp::next_prime(p)) {
    const bool enough = static_cast<int>(tb.primes_used.size()) >= prime_count;
    if (enough && (largest_expected <= 0 || B.get_si() <= 0 || largest_prime_factor(B.get_si()) <= largest_expected ||
                   extra >= extra_limit))
      break;
    if (p > kBoundPrimeSearchLimit) {
      if (enough) break;
      throw NoGoodPrimes("fewer than " + std::to_string(prime_count) + " admissible primes below " +
                         std::to_string(kBoundPrimeSearchLimit));
    }
    auto counts = counts_at(E, p, den);
    if (!counts) continue;
    std::ostringstream os;
    os << "p=" << p << ":";
    for (auto [q, n] : *counts) {
      os << " #E(F_" << q << ")=" << n;
      Integer N(static_cast<unsigned long>(n));
      mpz_gcd(B.get_mpz_t(), B.get_mpz_t(), N.get_mpz_t());
    }
    if (enough) ++extra;
    tb.primes_used.push_back(p);
    tb.log.push_back(os.str());
  }
  tb.B = B.get_si();
  return tb;
}

}  // namespace

PrimeSplit split_prime(const CubicField& k, std::uint64_t p) {
  if (k.poly_disc() % static_cast<unsigned long>(p) == 0)
    throw RamifiedOrIndexPrime(std::to_string(p) + " divides the polynomial discriminant of " + k.label());
  zp::Poly f = int_poly_mod(k.coeffs(), p);
  PrimeSplit s;
  s.p = p;
  for (auto& [d, g] : zp::ddf(f, p)) {
    if (d == 1) {
      for (auto r : zp::roots(g, p)) s.factors.push_back({p, zp::Poly{(p - r) % p, 1}, 1, nullptr});
    } else {
      s.factors.push_back({p, g, d, nullptr});
    }
  }
  std::sort(s.factors.begin(), s.factors.end(), [](const PrimeFactor& a, const PrimeFactor& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.g < b.g;
  });
  for (auto& f : s.factors) f.field = make_residue_field(p, f.g);
  return s;
}

FFElement reduce(const Rational& a, const FFRef& field) { return field->from_prime(rational_mod(a, field->p())); }

FFElement reduce(const FieldElement& a, const PrimeFactor& prime) {
  const auto& F = prime.field;
  const auto& c = a.coords();
  FFElement g = F->generator();
  return F->from_prime(rational_mod(c[0], prime.p)) + F->from_prime(rational_mod(c[1], prime.p)) * g +
         F->from_prime(rational_mod(c[2], prime.p)) * g * g;
}

FFCurve reduce_curve(const QCurve& E, const FFRef& field) {
  try {
    return base_change<FFElement>(E, field, [&](const Rational& a) { return reduce(a, field); });
  } catch (const SingularCurve&) {
    throw BadReduction("bad reduction at " + std::to_string(field->p()));
  }
}

FFCurve reduce_curve(const KCurve& E, const PrimeFactor& prime) {
  try {
    return base_change<FFElement>(E, prime.field, [&](const FieldElement& a) { return reduce(a, prime); });
  } catch (const SingularCurve&) {
    throw BadReduction("bad reduction at a prime above " + std::to_string(prime.p));
  }
}

CurvePoint<FFElement> reduce_point(const CurvePoint<Rational>& P, const FFRef& field) {
  if (P.is_infinity()) return {};
  return {reduce(P.x(), field), reduce(P.y(), field)};
}

CurvePoint<FFElement> reduce_point(const CurvePoint<FieldElement>& P, const PrimeFactor& prime) {
  if (P.is_infinity()) return {};
  return {reduce(P.x(), prime), reduce(P.y(), prime)};
}

bool within_hasse(std::uint64_t count, std::uint64_t q) {
  Integer t = Integer(static_cast<unsigned long>(q)) + 1 - Integer(static_cast<unsigned long>(count));
  return t * t <= 4 * Integer(static_cast<unsigned long>(q));
}

namespace {

std::uint64_t count_with(const FFCurve& E, bool parallel) {
  const auto& F = *E.context();
  if (F.size() > kEnumerationCap) throw TooLarge("point count over a field of size " + std::to_string(F.size()));
  std::uint32_t a[5];
  for (std::size_t i = 0; i < 5; ++i) a[i] = E.a()[i].index();
  std::uint64_t n = parallel ? kernels::count_points_omp(F.packed(), a) : kernels::count_points_serial(F.packed(), a);
  g_counts.fetch_add(1, std::memory_order_relaxed);
  if (!within_hasse(n, F.size())) {
    g_hasse_failures.fetch_add(1, std::memory_order_relaxed);
    throw HasseViolation("#E = " + std::to_string(n) + " over F_" + std::to_string(F.size()));
  }
  return n;
}

}  // namespace

std::uint64_t count_points(const FFCurve& E, bool parallel) { return count_with(E, parallel); }
std::uint64_t count_points_reference(const FFCurve& E) { return count_with(E, false); }

CountAudit count_audit() { return {g_counts.load(), g_hasse_failures.load()}; }

std::vector<CurvePoint<FFElement>> all_points(const FFCurve& E) {
  const auto& F = E.context();
  if (F->size() > 10000) throw TooLarge("point enumeration over a field of size " + std::to_string(F->size()));
  std::vector<CurvePoint<FFElement>> pts{CurvePoint<FFElement>::infinity()};
  auto elems = enumerate(F);
  // root_of[s] = some y with y^2 = s, or -1.
  std::vector<long> root_of(F->size(), -1);
  for (const auto& y : elems) root_of[(y * y).index()] = y.index();
  const FFElement two = F->from_int(2);
  for (const auto& x : elems) {
    FFElement A = E.a1() * x + E.a3();
    FFElement B = x * x * x + E.a2() * x * x + E.a4() * x + E.a6();
    if (F->p() == 2) {
      for (const auto& y : elems)
        if (y * y + A * y == B) pts.emplace_back(x, y);
      continue;
    }
    FFElement disc = A * A + F->from_int(4) * B;
    long s = root_of[disc.index()];
    if (s < 0) continue;
    FFElement r = F->element(static_cast<std::uint32_t>(s));
    pts.emplace_back(x, (r - A) / two);
    if (!r.is_zero()) pts.emplace_back(x, (-r - A) / two);
  }
  return pts;
}

GroupStructure group_structure(const FFCurve& E) {
  auto pts = all_points(E);
  const long N = static_cast<long>(pts.size());
  long exponent = 1;
  for (const auto& P : pts) {
    long n = *point_order_with_bound(E, P, N);
    exponent = std::lcm(exponent, n);
  }
  return {static_cast<std::uint64_t>(N / exponent), static_cast<std::uint64_t>(exponent)};
}

Integer frobenius_counts(std::uint64_t count_q, std::uint64_t q, int k) {
  if (!within_hasse(count_q, q))
    throw HasseViolation("#E = " + std::to_string(count_q) + " violates the Hasse bound over F_" + std::to_string(q));
  if (k < 1) throw PreconditionFailed("extension degree must be >= 1");
  const Integer Q(static_cast<unsigned long>(q));
  const Integer a = Q + 1 - Integer(static_cast<unsigned long>(count_q));
  Integer s_prev = 2, s = a;
  for (int i = 2; i <= k; ++i) {
    Integer next = a * s - Q * s_prev;
    s_prev = s;
    s = next;
  }
  Integer qk;
  mpz_pow_ui(qk.get_mpz_t(), Q.get_mpz_t(), static_cast<unsigned long>(k));
  return qk + 1 - s;
}

TorsionBound torsion_bound(const QCurve& E, int prime_count) { return bound_impl(E, prime_count, 0, 0); }
TorsionBound torsion_bound(const KCurve& E, int prime_count) { return bound_impl(E, prime_count, 0, 0); }
TorsionBound refine_torsion_bound(const QCurve& E, int prime_count, long largest_expected, int extra_limit) {
  return bound_impl(E, prime_count, largest_expected, extra_limit);
}
TorsionBound refine_torsion_bound(const KCurve& E, int prime_count, long largest_expected, int extra_limit) {
  return bound_impl(E, prime_count, largest_expected, extra_limit);
}

}  // namespace cubtors
