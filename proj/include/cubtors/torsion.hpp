#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cubtors/ground.hpp"
#include "cubtors/reduction.hpp"

namespace cubtors {

enum class TorsionStatus { Certified, LowerBoundOnly };
std::string to_string(TorsionStatus s);

struct TorsionConfig {
  FieldRootConfig roots{};
  int bound_primes = kDefaultBoundPrimes;
  /// Extra primes are added to the bound while it has a prime factor above
  /// this, at most extra_bound_primes of them.
  long largest_expected_prime = 13;
  int extra_bound_primes = 12;
};

/// The points of l-power order in E(F): levels[j] holds every point of exact
/// order l^(j+1).
template <class F>
struct PrimaryPart {
  long ell = 0;
  std::vector<std::vector<CurvePoint<F>>> levels;
  long n1 = 1;
  long n2 = 1;
  bool complete = true;
  std::vector<std::string> log;
  long order() const {
    long n = 1;
    for (const auto& l : levels) n += static_cast<long>(l.size());
    return n;
  }
};

template <class F>
struct TorsionResult {
  long n1 = 1;
  long n2 = 1;
  /// Generator of order n2, then (when n1 > 1) one of order n1.
  std::vector<CurvePoint<F>> generators;
  long bound_B = 0;
  std::vector<std::uint64_t> primes_used;
  TorsionStatus status = TorsionStatus::Certified;
  std::vector<std::string> log;
};

/// All points of order l^j, j <= max_exponent, found from the roots of the
/// l-division polynomial and then by repeatedly solving x([l]X) = x(Q).
PrimaryPart<Rational> primary_part(const QCurve& E, long ell, int max_exponent, const TorsionConfig& cfg = {});
PrimaryPart<FieldElement> primary_part(const KCurve& E, long ell, int max_exponent, const TorsionConfig& cfg = {});

TorsionResult<Rational> torsion_subgroup(const QCurve& E, const TorsionConfig& cfg = {});
TorsionResult<FieldElement> torsion_subgroup(const KCurve& E, const TorsionConfig& cfg = {});

enum class Answer { Yes, No, Unknown };
std::string to_string(Answer a);

template <class F>
struct OrderQuery {
  Answer answer = Answer::Unknown;
  std::optional<CurvePoint<F>> point;
};

OrderQuery<Rational> has_point_of_order(const QCurve& E, long n, const TorsionConfig& cfg = {});
OrderQuery<FieldElement> has_point_of_order(const KCurve& E, long n, const TorsionConfig& cfg = {});

/// Exact order of P checked by multiplication: nP = O and (n/l)P != O for
/// each prime l | n.
template <class F>
bool has_exact_order(const WeierstrassCurve<F>& E, const CurvePoint<F>& P, long n) {
  if (!scalar_mul(E, n, P).is_infinity()) return false;
  for (auto [p, e] : detail::factor_small(n))
    if (scalar_mul(E, n / p, P).is_infinity()) return false;
  return true;
}

KCurve base_change(const QCurve& E, const FieldRef& k);

struct Sylow2Comparison {
  bool same = false;
  long q_n1 = 1, q_n2 = 1;  // 2-parts over Q
  long k_n1 = 1, k_n2 = 1;  // 2-parts over K
  bool complete = true;
};

/// Compares the 2-primary torsion over Q and over K. Throws
/// PreconditionFailed when the rational 2-part is trivial.
Sylow2Comparison sylow2_compare(const QCurve& E, const FieldRef& k, const TorsionConfig& cfg = {});
bool sylow2_check(const QCurve& E, const FieldRef& k, const TorsionConfig& cfg = {});

/// Deterministic order on points: infinity first, then x, then y (under the
/// first embedding for cubic-field points).
bool canonical_point_less(const CurvePoint<Rational>& a, const CurvePoint<Rational>& b);
bool canonical_point_less(const CurvePoint<FieldElement>& a, const CurvePoint<FieldElement>& b);

}  // namespace cubtors
