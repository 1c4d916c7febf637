#pragma once

#include <atomic>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cubtors/cubic_field.hpp"
#include "cubtors/curve.hpp"
#include "cubtors/finite_field.hpp"

namespace cubtors {

using QCurve = WeierstrassCurve<Rational>;
using KCurve = WeierstrassCurve<FieldElement>;
using FFCurve = WeierstrassCurve<FFElement>;

/// One prime of K above p: the irreducible factor g of the defining cubic mod
/// p and the residue field F_p[x]/(g), with the generator mapped to x.
struct PrimeFactor {
  std::uint64_t p = 0;
  zp::Poly g;
  int degree = 0;
  FFRef field;
};

struct PrimeSplit {
  std::uint64_t p = 0;
  /// Ordered by residue degree, then lexicographically by g.
  std::vector<PrimeFactor> factors;
};

/// Factorization of the defining cubic mod p. Throws RamifiedOrIndexPrime when
/// p divides the polynomial discriminant.
PrimeSplit split_prime(const CubicField& k, std::uint64_t p);

/// Reduction maps. Throw NonIntegral when p divides a denominator.
FFElement reduce(const Rational& a, const FFRef& field);
FFElement reduce(const FieldElement& a, const PrimeFactor& prime);

/// Reduced curve; throws BadReduction when the reduced discriminant vanishes.
FFCurve reduce_curve(const QCurve& E, const FFRef& field);
FFCurve reduce_curve(const KCurve& E, const PrimeFactor& prime);

CurvePoint<FFElement> reduce_point(const CurvePoint<Rational>& P, const FFRef& field);
CurvePoint<FFElement> reduce_point(const CurvePoint<FieldElement>& P, const PrimeFactor& prime);

/// #E(F_q) including the point at infinity, checked against the Hasse bound
/// (HasseViolation). Throws TooLarge for q > 10^6.
std::uint64_t count_points(const FFCurve& E, bool parallel = true);
std::uint64_t count_points_reference(const FFCurve& E);

/// Every count performed in this process, for auditing the Hasse bound.
struct CountAudit {
  std::uint64_t counts = 0;
  std::uint64_t hasse_failures = 0;
};
CountAudit count_audit();

/// True if |N - q - 1| <= 2 sqrt(q), decided in integers.
bool within_hasse(std::uint64_t count, std::uint64_t q);

struct GroupStructure {
  std::uint64_t n1 = 1;
  std::uint64_t n2 = 1;
  friend bool operator==(const GroupStructure&, const GroupStructure&) = default;
};

/// Z/n1 + Z/n2 from the orders of all points; q <= 10^4 (TooLarge).
GroupStructure group_structure(const FFCurve& E);

/// All points of E(F_q) (q <= 10^4), infinity first.
std::vector<CurvePoint<FFElement>> all_points(const FFCurve& E);

/// #E(F_{q^k}) from #E(F_q) via the trace recurrence. Throws HasseViolation.
Integer frobenius_counts(std::uint64_t count_q, std::uint64_t q, int k);

struct TorsionBound {
  long B = 0;
  std::vector<std::uint64_t> primes_used;
  /// Human-readable per-prime record, e.g. "p=5: 125->140".
  std::vector<std::string> log;
};

inline constexpr int kDefaultBoundPrimes = 3;
inline constexpr std::uint64_t kBoundPrimeSearchLimit = 2000;

/// gcd of #E over the residue fields at admissible primes p >= 3: p prime to
/// the polynomial discriminant and to every coefficient denominator, with good
/// reduction at every prime above p. Throws NoGoodPrimes.
TorsionBound torsion_bound(const QCurve& E, int prime_count = kDefaultBoundPrimes);
TorsionBound torsion_bound(const KCurve& E, int prime_count = kDefaultBoundPrimes);

/// Continues past prime_count while B keeps a prime factor above
/// largest_expected, up to extra_limit further primes.
TorsionBound refine_torsion_bound(const QCurve& E, int prime_count, long largest_expected, int extra_limit);
TorsionBound refine_torsion_bound(const KCurve& E, int prime_count, long largest_expected, int extra_limit);

}  // namespace cubtors
