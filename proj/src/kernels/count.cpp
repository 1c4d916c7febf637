#include <omp.h>

#include "cubtors/kernels.hpp"

namespace cubtors::kernels {

std::uint32_t PackedField::add(std::uint32_t a, std::uint32_t b) const {
  std::uint32_t r = 0, scale = 1;
  for (int i = 0; i < k; ++i) {
    std::uint64_t ai = a % p, bi = b % p;
    a = static_cast<std::uint32_t>(a / p);
    b = static_cast<std::uint32_t>(b / p);
    r += static_cast<std::uint32_t>((ai + bi) % p) * scale;
    scale *= static_cast<std::uint32_t>(p);
  }
  return r;
}

std::uint32_t PackedField::sub(std::uint32_t a, std::uint32_t b) const {
  std::uint32_t r = 0, scale = 1;
  for (int i = 0; i < k; ++i) {
    std::uint64_t ai = a % p, bi = b % p;
    a = static_cast<std::uint32_t>(a / p);
    b = static_cast<std::uint32_t>(b / p);
    r += static_cast<std::uint32_t>((ai + p - bi) % p) * scale;
    scale *= static_cast<std::uint32_t>(p);
  }
  return r;
}

std::uint32_t PackedField::mul(std::uint32_t a, std::uint32_t b) const {
  std::uint64_t x[3], y[3], prod[5] = {0, 0, 0, 0, 0};
  for (int i = 0; i < k; ++i) {
    x[i] = a % p;
    a = static_cast<std::uint32_t>(a / p);
    y[i] = b % p;
    b = static_cast<std::uint32_t>(b / p);
  }
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
  // x^k = -(m[k-1] x^{k-1} + ... + m[0])
  for (int d = 2 * k - 2; d >= k; --d) {
    std::uint64_t c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    for (int i = 0; i < k; ++i) {
      std::uint64_t t = (c * m[i]) % p;
      prod[d - k + i] = (prod[d - k + i] + p - t) % p;
    }
  }
  std::uint32_t r = 0, scale = 1;
  for (int i = 0; i < k; ++i) {
    r += static_cast<std::uint32_t>(prod[i]) * scale;
    scale *= static_cast<std::uint32_t>(p);
  }
  return r;
}

std::vector<std::uint8_t> square_table(const PackedField& f) {
  std::vector<std::uint8_t> t(f.q, 0);
  for (std::uint64_t y = 1; y < f.q; ++y) t[f.mul(static_cast<std::uint32_t>(y), static_cast<std::uint32_t>(y))] = 1;
  return t;
}

namespace {

// Number of y with y^2 + A y = B.
std::uint64_t solutions(const PackedField& f, const std::vector<std::uint8_t>& squares, std::uint32_t A,
                        std::uint32_t B) {
  if (f.p == 2) {
    std::uint64_t n = 0;
    for (std::uint32_t y = 0; y < f.q; ++y)
      if (f.add(f.mul(y, y), f.mul(A, y)) == B) ++n;
    return n;
  }
  // (2y + A)^2 = A^2 + 4B
  std::uint32_t four = static_cast<std::uint32_t>(4 % f.p);
  std::uint32_t disc = f.add(f.mul(A, A), f.mul(four, B));
  if (disc == 0) return 1;
  return squares[disc] ? 2 : 0;
}

std::uint64_t count_at(const PackedField& f, const std::vector<std::uint8_t>& squares, const std::uint32_t a[5],
                       std::uint32_t x) {
  std::uint32_t A = f.add(f.mul(a[0], x), a[2]);
  std::uint32_t x2 = f.mul(x, x);
  std::uint32_t B = f.add(f.add(f.add(f.mul(x2, x), f.mul(a[1], x2)), f.mul(a[3], x)), a[4]);
  return solutions(f, squares, A, B);
}

}  // namespace

std::uint64_t count_points_serial(const PackedField& f, const std::uint32_t a[5]) {
  auto squares = f.p == 2 ? std::vector<std::uint8_t>{} : square_table(f);
  std::uint64_t total = 1;
  for (std::uint64_t x = 0; x < f.q; ++x) total += count_at(f, squares, a, static_cast<std::uint32_t>(x));
  return total;
}

std::uint64_t count_points_omp(const PackedField& f, const std::uint32_t a[5]) {
  auto squares = f.p == 2 ? std::vector<std::uint8_t>{} : square_table(f);
  std::uint64_t total = 1;
  const long q = static_cast<long>(f.q);
#pragma omp parallel for schedule(static) reduction(+ : total)
  for (long x = 0; x < q; ++x) total += count_at(f, squares, a, static_cast<std::uint32_t>(x));
  return total;
}

}  // namespace cubtors::kernels
