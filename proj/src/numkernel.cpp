#include "cubtors/numkernel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cubtors/errors.hpp"
#include "cubtors/kernels.hpp"

namespace cubtors {

namespace {

Integer floor_div(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
  return q;
}

// log2 |z| as a double, -inf for zero.
double log2_abs(const BigComplex& z) {
  double a = z.re().is_zero() ? -HUGE_VAL : static_cast<double>(z.re().exponent());
  double b = z.im().is_zero() ? -HUGE_VAL : static_cast<double>(z.im().exponent());
  return std::max(a, b);
}

// Initial approximations on circles whose radii come from the upper convex
// hull of (i, log2|c_i|), one circle per hull edge.
std::vector<BigComplex> initial_guesses(const std::vector<BigComplex>& c, long bits) {
  const long n = static_cast<long>(c.size()) - 1;
  std::vector<double> lg(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) lg[i] = log2_abs(c[i]);
  std::vector<long> hull;
  for (long i = 0; i <= n; ++i) {
    if (std::isinf(lg[static_cast<std::size_t>(i)])) continue;
    while (hull.size() >= 2) {
      long a = hull[hull.size() - 2], b = hull.back();
      double cross = (static_cast<double>(b - a)) * (lg[static_cast<std::size_t>(i)] - lg[static_cast<std::size_t>(a)]) -
                     (lg[static_cast<std::size_t>(b)] - lg[static_cast<std::size_t>(a)]) * static_cast<double>(i - a);
      if (cross >= 0)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(i);
  }
  std::vector<BigComplex> z;
  long placed = 0;
  // Roots at zero correspond to leading zero coefficients; c[0] != 0 is not
  // guaranteed, so the first hull vertex may be > 0.
  for (long i = 0; i < hull.front(); ++i) {
    double ang = 2 * std::numbers::pi * static_cast<double>(placed) / static_cast<double>(n) + 0.4;
    z.emplace_back(BigFloat::from_double(1e-3 * std::cos(ang), bits), BigFloat::from_double(1e-3 * std::sin(ang), bits));
    ++placed;
  }
  for (std::size_t h = 0; h + 1 < hull.size(); ++h) {
    long a = hull[h], b = hull[h + 1];
    double log_r = (lg[static_cast<std::size_t>(a)] - lg[static_cast<std::size_t>(b)]) / static_cast<double>(b - a);
    for (long m = 0; m < b - a; ++m) {
      double ang = 2 * std::numbers::pi * (static_cast<double>(m) / static_cast<double>(b - a)) +
                   2 * std::numbers::pi * static_cast<double>(h) / static_cast<double>(n) + 0.4;
      BigFloat r = pow2(static_cast<long>(std::floor(log_r)), bits) *
                   BigFloat::from_double(std::exp2(log_r - std::floor(log_r)), bits);
      z.emplace_back(r * BigFloat::from_double(std::cos(ang), bits), r * BigFloat::from_double(std::sin(ang), bits));
      ++placed;
    }
  }
  return z;
}

BigComplex horner(const std::vector<BigComplex>& c, const BigComplex& z) {
  BigComplex acc = c.back();
  for (std::size_t i = c.size() - 1; i-- > 0;) acc = acc * z + c[i];
  return acc;
}

// n |h(z) / h'(z)|: a disk of this radius about z contains a root of h.
BigFloat inclusion_radius(const std::vector<BigComplex>& c, const BigComplex& z, long bits) {
  BigComplex p = c.back();
  BigComplex dp(bits);
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    dp = dp * z + p;
    p = p * z + c[i];
  }
  if (p.is_zero()) return BigFloat(bits);
  if (dp.is_zero()) return pow2(bits, bits);
  return (p / dp).abs() * BigFloat(static_cast<long>(c.size() - 1), bits);
}

bool all_real(const std::vector<BigComplex>& c) {
  return std::all_of(c.begin(), c.end(), [](const BigComplex& z) { return z.im().is_zero(); });
}

}  // namespace

std::optional<Rational> rat_reconstruct(const BigFloat& x, const Integer& denominator_bound) {
  if (!x.is_finite() || denominator_bound < 1) return std::nullopt;
  const long prec = x.precision();
  Rational X = x.to_rational();
  Rational scale = X.abs() < Rational(1) ? Rational(1) : X.abs();
  // tol = 2^(-prec/2) * max(1, |x|)
  Integer two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(prec / 2));
  Rational tol = scale / Rational(two_pow);

  Integer p_prev = 1, q_prev = 0;
  Integer p_cur, q_cur;
  Rational r = X;
  bool first = true;
  while (true) {
    Integer a = floor_div(r);
    Integer p_next = first ? a : a * p_cur + p_prev;
    Integer q_next = first ? Integer(1) : a * q_cur + q_prev;
    if (!first) {
      p_prev = p_cur;
      q_prev = q_cur;
    }
    first = false;
    p_cur = p_next;
    q_cur = q_next;
    if (q_cur > denominator_bound) return std::nullopt;
    Rational conv(p_cur, q_cur);
    if ((X - conv).abs() < tol) return conv;
    Rational frac = r - Rational(a);
    if (frac.is_zero()) return std::nullopt;
    r = frac.inv();
  }
}

bool canonical_root_less(const BigComplex& a, const BigComplex& b, const BigFloat& tol) {
  BigFloat d = a.re() - b.re();
  if (d.abs() > tol) return d.sign() < 0;
  return compare(a.im(), b.im()) < 0;
}

std::vector<BigComplex> complex_roots(const CoefficientSource& source, long degree, long precision_bits,
                                      const RootConfig& config) {
  if (degree < 1) throw PrecisionExhausted("complex_roots needs degree >= 1");
  if (precision_bits < 2) precision_bits = 2;

  const long target = precision_bits;
  const long cap = std::max(config.precision_cap, target + 32);
  auto sweep = config.parallel ? kernels::aberth_sweep_omp : kernels::aberth_sweep_serial;

  std::vector<BigComplex> z;
  std::vector<BigComplex> coeffs;
  bool real_input = false;
  long work = std::min<long>(64, target + 32);
  bool final_stage = false;
  while (true) {
    coeffs = source(work);
    if (static_cast<long>(coeffs.size()) != degree + 1 || coeffs.back().is_zero())
      throw PrecisionExhausted("coefficient source returned a polynomial of the wrong degree");
    real_input = all_real(coeffs);
    if (z.empty()) {
      z = initial_guesses(coeffs, work);
    } else {
      for (auto& r : z) r = r.with_precision(work);
    }
    std::vector<char> converged(z.size(), 0);
    const int max_iter = z.size() == 1 ? 8 : (final_stage ? 200 : 400 + 4 * static_cast<int>(z.size()));
    std::size_t moving = z.size();
    for (int it = 0; it < max_iter && moving > 0; ++it) moving = sweep(coeffs, z, converged, work);

    if (final_stage) {
      BigFloat maxc(work);
      for (const auto& c : coeffs) {
        BigFloat m = c.abs();
        if (maxc < m) maxc = m;
      }
      BigFloat bound = maxc * pow2(-target + 10, work);
      bool ok = moving == 0;
      for (std::size_t k = 0; ok && k < z.size(); ++k)
        if (bound < horner(coeffs, z[k]).abs()) ok = false;
      // A small residual does not mean an accurate root when roots cluster;
      // also require the inclusion radius to be below the target precision.
      const BigFloat one(1, work);
      for (std::size_t k = 0; ok && k < z.size(); ++k) {
        BigFloat mag = z[k].abs();
        if (mag < one) mag = one;
        if (pow2(-target + 8, work) * mag < inclusion_radius(coeffs, z[k], work)) ok = false;
      }
      if (ok) break;
      if (work >= cap) throw PrecisionExhausted("residual contract not met at " + std::to_string(work) + " bits");
      work = std::min(cap, 2 * work);
    } else {
      final_stage = true;
      work = target + 32;
    }
  }

  std::vector<BigComplex> out;
  out.reserve(z.size());
  BigFloat tol = pow2(-target / 2, target);
  for (auto& r : z) {
    BigComplex v = r.with_precision(target);
    if (real_input) {
      BigFloat mag = v.abs();
      BigFloat one(1, target);
      BigFloat t = tol * (mag < one ? one : mag);
      if (!(t < v.im().abs())) v = BigComplex(v.re(), BigFloat(target));
    }
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end(), [&](const BigComplex& a, const BigComplex& b) {
    BigFloat ma = a.abs(), mb = b.abs(), one(1, target);
    BigFloat m = ma < mb ? mb : ma;
    BigFloat t = tol * (m < one ? one : m);
    return canonical_root_less(a, b, t);
  });
  return out;
}

std::vector<BigComplex> complex_roots(const QPoly& h, long precision_bits, const RootConfig& config) {
  if (h.degree() < 1) throw PrecisionExhausted("complex_roots needs degree >= 1");
  if (!is_squarefree(h)) throw NotSquarefree("gcd(h, h') is nonconstant for " + h.to_string());
  auto source = [&h](long bits) {
    std::vector<BigComplex> c;
    for (const auto& a : h.coeffs()) c.emplace_back(a, bits);
    return c;
  };
  return complex_roots(source, h.degree(), precision_bits, config);
}

std::vector<BigComplex> complex_roots(const std::vector<BigComplex>& coeffs, long precision_bits,
                                      const RootConfig& config) {
  auto source = [&coeffs](long bits) {
    std::vector<BigComplex> c;
    for (const auto& a : coeffs) c.push_back(a.with_precision(bits));
    return c;
  };
  return complex_roots(source, static_cast<long>(coeffs.size()) - 1, precision_bits, config);
}

}  // namespace cubtors
