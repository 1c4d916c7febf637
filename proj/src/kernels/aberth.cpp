#include <omp.h>

#include "cubtors/kernels.hpp"

namespace cubtors::kernels {

namespace {

// New approximation for root k from the previous iterate (Jacobi update).
// Returns true if the correction is negligible at the working precision.
bool aberth_update(const std::vector<BigComplex>& coeffs, const std::vector<BigComplex>& z, std::size_t k,
                   long working_bits, BigComplex& out) {
  const BigComplex& zk = z[k];
  BigComplex p = coeffs.back();
  BigComplex dp(working_bits);
  // Horner on magnitudes: the scale of the rounding error in p.
  const BigFloat zabs = zk.abs();
  BigFloat scale = coeffs.back().abs();
  for (std::size_t i = coeffs.size() - 1; i-- > 0;) {
    dp = dp * zk + p;
    p = p * zk + coeffs[i];
    scale = scale * zabs + coeffs[i].abs();
  }
  if (p.is_zero()) {
    out = zk;
    return true;
  }
  if (dp.is_zero()) {
    // Stationary point of h: nudge off it.
    out = zk + BigComplex(pow2(-working_bits / 4, working_bits), pow2(-working_bits / 4, working_bits));
    return false;
  }
  BigComplex w = p / dp;
  BigComplex s(working_bits);
  for (std::size_t j = 0; j < z.size(); ++j) {
    if (j == k) continue;
    BigComplex d = zk - z[j];
    if (d.is_zero()) continue;
    s = s + BigComplex(BigFloat(1, working_bits), BigFloat(working_bits)) / d;
  }
  BigComplex denom = BigComplex(BigFloat(1, working_bits), BigFloat(working_bits)) - w * s;
  BigComplex delta = denom.is_zero() ? w : w / denom;
  out = zk - delta;
  BigFloat mag = zabs;
  BigFloat one(1, working_bits);
  if (mag < one) mag = one;
  if (!(pow2(-working_bits + 4, working_bits) * mag < delta.abs())) return true;
  // Ill-conditioned roots stall above that threshold; stop once h(z) is lost
  // in the rounding noise of its own evaluation.
  return !(pow2(-working_bits + 8, working_bits) * scale < p.abs());
}

}  // namespace

std::size_t aberth_sweep_serial(const std::vector<BigComplex>& coeffs, std::vector<BigComplex>& z,
                                std::vector<char>& converged, long working_bits) {
  std::vector<BigComplex> next = z;
  std::size_t moving = 0;
  for (std::size_t k = 0; k < z.size(); ++k) {
    if (converged[k]) continue;
    if (aberth_update(coeffs, z, k, working_bits, next[k]))
      converged[k] = 1;
    else
      ++moving;
  }
  z = std::move(next);
  return moving;
}

std::size_t aberth_sweep_omp(const std::vector<BigComplex>& coeffs, std::vector<BigComplex>& z,
                             std::vector<char>& converged, long working_bits) {
  std::vector<BigComplex> next = z;
  const long n = static_cast<long>(z.size());
  std::size_t moving = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : moving)
  for (long k = 0; k < n; ++k) {
    auto kk = static_cast<std::size_t>(k);
    if (converged[kk]) continue;
    if (aberth_update(coeffs, z, kk, working_bits, next[kk]))
      converged[kk] = 1;
    else
      ++moving;
  }
  z = std::move(next);
  return moving;
}

}  // namespace cubtors::kernels
