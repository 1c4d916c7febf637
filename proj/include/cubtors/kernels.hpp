#pragma once

// Data-parallel inner loops. Every kernel has a serial reference version with
// identical arithmetic; the OpenMP versions must produce bit-identical output.

#include <cstdint>
#include <vector>

#include "cubtors/bigfloat.hpp"

namespace cubtors::kernels {

/// One Jacobi sweep of the Aberth iteration over all roots not yet marked
/// converged. Updates z in place, sets converged[k] when the correction falls
/// below 2^(-working_bits+4) relative to |z_k|. Returns the number of roots
/// still moving.
std::size_t aberth_sweep_serial(const std::vector<BigComplex>& coeffs, std::vector<BigComplex>& z,
                                std::vector<char>& converged, long working_bits);
std::size_t aberth_sweep_omp(const std::vector<BigComplex>& coeffs, std::vector<BigComplex>& z,
                             std::vector<char>& converged, long working_bits);

/// Prime-field description used by the point-count kernels: elements are
/// encoded as integers c0 + c1 p + c2 p^2.
struct PackedField {
  std::uint64_t p = 0;
  int k = 1;
  /// Monic modulus x^k + m[k-1] x^{k-1} + ... + m[0].
  std::uint64_t m[3] = {0, 0, 0};
  std::uint64_t q = 0;

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
};

/// Table t[i] = 1 if element i is a nonzero square, used by quadratic counting.
std::vector<std::uint8_t> square_table(const PackedField& f);

/// #E(F_q) for y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6, a given as packed
/// elements, including the point at infinity.
std::uint64_t count_points_serial(const PackedField& f, const std::uint32_t a[5]);
std::uint64_t count_points_omp(const PackedField& f, const std::uint32_t a[5]);

}  // namespace cubtors::kernels
