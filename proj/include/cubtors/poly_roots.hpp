#pragma once

#include <set>
#include <vector>

#include "cubtors/cubic_field.hpp"
#include "cubtors/finite_field.hpp"
#include "cubtors/numkernel.hpp"
#include "cubtors/polynomial.hpp"

namespace cubtors {

/// Squarefreeness over Q, decided modulo a prime when possible (a squarefree
/// reduction of the same degree proves it), otherwise by exact gcd.
bool is_squarefree_q(const QPoly& h);

/// Squarefreeness over K, decided modulo a degree-one prime of K when
/// possible, otherwise by exact gcd over K.
bool is_squarefree_k(const KPoly& h);

/// Distinct rational roots of h, ascending. Exact: roots modulo a good prime
/// are Hensel-lifted and rationally reconstructed under the bounds of the
/// rational root theorem, then verified by evaluation.
std::vector<Rational> rational_roots(const QPoly& h);

inline Integer default_height_bound() {
  Integer b;
  mpz_ui_pow_ui(b.get_mpz_t(), 10, 40);
  return b;
}

struct FieldRootConfig {
  long precision_bits = kDefaultPrecisionBits;
  /// Bound on the denominators of the power-basis coordinates of a root.
  Integer height_bound = default_height_bound();
  RootConfig numeric{};
  /// Enumerate embedding tuples with OpenMP.
  bool parallel = true;
};

struct FieldRootSearch {
  std::vector<FieldElement> roots;
  /// True when every numeric stage met its contract, so every root whose
  /// coordinate denominators are within the height bound was found.
  bool complete = true;
};

/// Roots of h lying in K, found by reconstructing power-basis coordinates
/// from embedding-consistent tuples of complex roots and verified exactly.
/// Sorted by the image under the first embedding.
FieldRootSearch roots_in_field(const KPoly& h, const FieldRootConfig& config = {});
FieldRootSearch roots_in_field(const QPoly& h, const FieldRef& k, const FieldRootConfig& config = {});

struct DegreeCertificate {
  QPoly poly;
  std::vector<std::uint64_t> primes_used;
  /// Degrees a factor over Q could have, given the factorization patterns
  /// modulo the primes used.
  std::set<int> possible_factor_degrees;
  /// Largest d with no possible factor degree in 1..d.
  int certified_no_factor_up_to = 0;
  bool irreducible_certified = false;
  /// Degrees ruled out by Hensel lifting rather than by the patterns alone.
  std::set<int> lifted_exclusions;
  std::uint64_t lift_prime = 0;
  /// A true factor met while lifting, primitive integral.
  std::optional<QPoly> small_factor;
};

inline constexpr int kDefaultDdfPrimes = 5;
inline constexpr std::uint64_t kDdfPrimeSearchBound = 100000;

/// Intersects the subset sums of the mod-p factor-degree partitions over
/// prime_count admissible primes p >= 5. Throws NoGoodPrimes. With
/// lift_up_to > 0, every possible degree up to it that survives the patterns
/// is then settled by small_factor_search at the prime with fewest
/// candidates.
DegreeCertificate factor_degree_sets(const QPoly& h, int prime_count = kDefaultDdfPrimes, int lift_up_to = 0);

/// Irreducible factors of f modulo an odd prime p (f squarefree mod p), monic,
/// by distinct-degree then Cantor-Zassenhaus equal-degree splitting.
std::vector<zp::Poly> zp_factor(const zp::Poly& f, std::uint64_t p);

/// Number of sub-multisets of parts summing to a value in targets, capped.
std::size_t count_degree_subsets(const std::vector<int>& parts, const std::set<int>& targets, std::size_t cap);

inline constexpr std::size_t kLiftCandidateCap = 100000;

struct SmallFactorSearch {
  std::uint64_t prime = 0;
  std::size_t candidates = 0;
  /// False when the candidate count exceeded the cap and nothing was tried.
  bool searched = false;
  /// The first factor over Q found with degree in the target set.
  std::optional<QPoly> factor;
};

/// Decides whether h has a factor over Q whose degree lies in degrees: the
/// factorization mod p is Hensel-lifted past the Mignotte bound and every
/// product of lifted factors with a target degree is trial-divided.
/// Pre: p odd, p does not divide the leading coefficient, h squarefree mod p.
SmallFactorSearch small_factor_search(const QPoly& h, const std::set<int>& degrees, std::uint64_t p,
                                      std::size_t candidate_cap = kLiftCandidateCap);

/// Subset sums (nonempty) of a multiset of degrees; helper exposed for tests.
std::set<int> subset_sums(const std::vector<int>& parts);

}  // namespace cubtors
