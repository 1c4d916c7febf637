#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "cubtors/bigfloat.hpp"
#include "cubtors/polynomial.hpp"
#include "cubtors/rational.hpp"

namespace cubtors {

/// Continued-fraction recognition of a rational p/q with q <= denominator_bound
/// and |x - p/q| < 2^(-precision/2) * max(1, |x|). Returns the first convergent
/// meeting the threshold, or nullopt.
std::optional<Rational> rat_reconstruct(const BigFloat& x, const Integer& denominator_bound);

struct RootConfig {
  long precision_cap = 4096;
  /// Run the per-root Aberth updates through the OpenMP kernel.
  bool parallel = true;
};

inline constexpr long kDefaultPrecisionBits = 256;

/// Produces the coefficients (low degree first) of a polynomial at a given
/// working precision. Lets the root finder re-round exact coefficients when it
/// escalates precision.
using CoefficientSource = std::function<std::vector<BigComplex>(long precision_bits)>;

/// All deg h complex roots by simultaneous Aberth iteration, with precision
/// doubling until |h(r)| <= 2^(-precision_bits+10) * max|coefficient| holds for
/// every root. Output ordered by ascending real part, then imaginary part.
/// Real-coefficient input gets exactly real roots where the imaginary part is
/// below 2^(-precision_bits/2). Squarefreeness is the caller's responsibility.
std::vector<BigComplex> complex_roots(const CoefficientSource& source, long degree, long precision_bits,
                                      const RootConfig& config = {});

/// Exact-coefficient overload: rejects non-squarefree input with NotSquarefree.
std::vector<BigComplex> complex_roots(const QPoly& h, long precision_bits, const RootConfig& config = {});

/// Fixed numeric coefficients; escalation only changes the working precision.
std::vector<BigComplex> complex_roots(const std::vector<BigComplex>& coeffs, long precision_bits,
                                      const RootConfig& config = {});

/// Canonical order on roots: ascending real part, then ascending imaginary
/// part, with real parts equal within tol treated as ties.
bool canonical_root_less(const BigComplex& a, const BigComplex& b, const BigFloat& tol);

}  // namespace cubtors
