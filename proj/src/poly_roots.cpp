#include "cubtors/poly_roots.hpp"

#include <omp.h>

#include <algorithm>
#include <limits>

#include "cubtors/errors.hpp"
#include "cubtors/finite_field.hpp"

namespace cubtors {

namespace {

// Image of a K-polynomial modulo the degree-one prime (p, a - r); empty if some
// coefficient is not p-integral.
std::optional<zp::Poly> reduce_at_linear_prime(const KPoly& h, std::uint64_t p, std::uint64_t r) {
  zp::Poly out;
  try {
    for (const auto& c : h.coeffs()) {
      const auto& x = c.coords();
      std::uint64_t v = (rational_mod(x[0], p) + zp::mulmod(rational_mod(x[1], p), r, p) +
                         zp::mulmod(rational_mod(x[2], p), zp::mulmod(r, r, p), p)) %
                        p;
      out.push_back(v);
    }
  } catch (const NonIntegral&) {
    return std::nullopt;
  }
  return out;
}

Integer mod_pos(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

Integer eval_mod(const std::vector<Integer>& a, const Integer& x, const Integer& m) {
  Integer acc = 0;
  for (std::size_t i = a.size(); i-- > 0;) acc = mod_pos(acc * x + a[i], m);
  return acc;
}

// Rational reconstruction modulo m: u/v with |u| <= n_bound, 0 < v <= d_bound,
// u = r v mod m.
std::optional<Rational> modular_reconstruct(const Integer& r, const Integer& m, const Integer& n_bound,
                                            const Integer& d_bound) {
  Integer r0 = m, r1 = r, s0 = 0, s1 = 1;
  while (r1 > n_bound) {
    Integer q = r0 / r1;
    Integer t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (s1 == 0 || abs(s1) > d_bound) return std::nullopt;
  return Rational(r1, s1);
}

}  // namespace

bool is_squarefree_q(const QPoly& h) {
  if (h.degree() <= 0) return true;
  auto a = primitive_integer_form(h);
  std::uint64_t p = 2;
  for (int tries = 0; tries < 40; ++tries) {
    p = zp::next_prime(p);
    Integer lc_mod = a.back() % static_cast<unsigned long>(p);
    if (lc_mod == 0) continue;
    zp::Poly r;
    for (const auto& c : a) r.push_back(mod_pos(c, Integer(static_cast<unsigned long>(p))).get_ui());
    zp::trim(r);
    if (zp::is_squarefree(r, p)) return true;
  }
  return is_squarefree(h);
}

bool is_squarefree_k(const KPoly& h) {
  if (h.degree() <= 0) return true;
  const auto& k = h.context();
  const auto& c = k->coeffs();
  QPoly f = k->defining_poly();
  std::uint64_t p = 2;
  int tried = 0;
  while (tried < 40 && p < 100000) {
    p = zp::next_prime(p);
    if (k->poly_disc() % static_cast<unsigned long>(p) == 0) continue;
    auto roots = zp::roots(zp::from_rational(f, p), p);
    if (roots.empty()) continue;
    ++tried;
    auto red = reduce_at_linear_prime(h, p, roots.front());
    if (!red || zp::degree(*red) != h.degree()) continue;
    if (zp::is_squarefree(*red, p)) return true;
  }
  (void)c;
  return is_squarefree(h);
}

std::vector<Rational> rational_roots(const QPoly& h0) {
  if (h0.is_zero()) throw DivisionByZero("rational_roots of the zero polynomial");
  std::vector<Rational> out;
  if (h0.degree() < 1) return out;
  QPoly h = is_squarefree_q(h0) ? h0 : squarefree_part(h0);
  auto a = primitive_integer_form(h);
  // Strip the factor x^m.
  std::size_t m = 0;
  while (m < a.size() && a[m] == 0) ++m;
  if (m > 0) {
    out.push_back(Rational(0));
    a.erase(a.begin(), a.begin() + static_cast<long>(m));
  }
  if (a.size() >= 2) {
    const Integer n_bound = abs(a.front());
    const Integer d_bound = abs(a.back());
    std::uint64_t ell = 2;
    zp::Poly red;
    while (true) {
      ell = zp::next_prime(ell);
      const Integer L(static_cast<unsigned long>(ell));
      if (mod_pos(a.back(), L) == 0 || mod_pos(a.front(), L) == 0) continue;
      red.clear();
      for (const auto& c : a) red.push_back(mod_pos(c, L).get_ui());
      zp::trim(red);
      if (zp::is_squarefree(red, ell)) break;
    }
    // Lift until the modulus exceeds 2 * n_bound * d_bound.
    const Integer target = 2 * n_bound * d_bound + 1;
    std::vector<Integer> da;
    for (std::size_t i = 1; i < a.size(); ++i) da.push_back(a[i] * static_cast<long>(i));
    for (std::uint64_t r0 : zp::roots(red, ell)) {
      Integer mod(static_cast<unsigned long>(ell));
      Integer r(static_cast<unsigned long>(r0));
      while (mod <= target) {
        Integer mod2 = mod * mod;
        Integer fr = eval_mod(a, r, mod2);
        Integer dfr = eval_mod(da, r, mod2);
        Integer inv;
        if (mpz_invert(inv.get_mpz_t(), dfr.get_mpz_t(), mod2.get_mpz_t()) == 0) break;
        r = mod_pos(r - fr * inv, mod2);
        mod = mod2;
      }
      auto cand = modular_reconstruct(r, mod, n_bound, d_bound);
      if (cand && !cand->is_zero() && h.eval(*cand).is_zero()) out.push_back(*cand);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

struct Candidate {
  std::array<Rational, 3> coords;
};

// Lagrange basis coefficients: coefficient j of the interpolant through the
// nodes r[i], as a 3x3 matrix L[i][j].
std::array<std::array<BigComplex, 3>, 3> lagrange(const std::vector<BigComplex>& r, long bits) {
  std::array<std::array<BigComplex, 3>, 3> L;
  for (std::size_t i = 0; i < 3; ++i) {
    const BigComplex& a = r[(i + 1) % 3];
    const BigComplex& b = r[(i + 2) % 3];
    BigComplex denom = (r[i] - a) * (r[i] - b);
    BigComplex one(BigFloat(1, bits), BigFloat(bits));
    // (X - a)(X - b) = X^2 - (a + b) X + ab
    L[i][0] = (a * b) / denom;
    L[i][1] = -(a + b) / denom;
    L[i][2] = one / denom;
  }
  return L;
}

bool is_real_root(const BigComplex& z) { return z.im().is_zero(); }

std::optional<Candidate> reconstruct_tuple(const std::array<BigComplex, 3>& v,
                                           const std::array<std::array<BigComplex, 3>, 3>& L, const Integer& bound) {
  Candidate c;
  for (std::size_t j = 0; j < 3; ++j) {
    BigComplex s = v[0] * L[0][j] + v[1] * L[1][j] + v[2] * L[2][j];
    auto q = rat_reconstruct(s.re(), bound);
    if (!q) return std::nullopt;
    c.coords[j] = *q;
  }
  return c;
}

}  // namespace

FieldRootSearch roots_in_field(const KPoly& h, const FieldRootConfig& config) {
  FieldRootSearch result;
  const FieldRef& k = h.context();
  if (h.degree() < 1) throw PreconditionFailed("roots_in_field needs deg h >= 1");
  if (h.degree() == 1) {
    result.roots.push_back(-(h.coeff(0) / h.coeff(1)));
    return result;
  }
  if (!is_squarefree_k(h)) throw NotSquarefree("h is not squarefree over " + k->label());

  // Reconstruction must be able to reject spurious tuples: require
  // 2^(-W/2) well below 1 / bound^2.
  long hb = ilog2(config.height_bound) + 1;
  long work = std::max(config.precision_bits, 4 * hb + 64);
  work = (work + 63) / 64 * 64;

  Embeddings emb(*k, work + 64);
  auto L = lagrange(emb.roots(), work + 64);
  const std::size_t n_emb = k->totally_real() ? 3 : 2;
  std::vector<std::vector<BigComplex>> images(n_emb);
  try {
    for (std::size_t i = 0; i < n_emb; ++i) {
      // Coefficients with large coordinates can embed to small values; the
      // cancellation costs that many bits, so embed with that much extra.
      long guard = 0;
      {
        Embeddings e(*k, 128);
        const BigComplex& r = e.roots()[i];
        const BigFloat ra = r.abs();
        for (const auto& a : h.coeffs()) {
          const auto& c = a.coords();
          BigFloat m = BigFloat(c[0], 128).abs() + BigFloat(c[1], 128).abs() * ra + BigFloat(c[2], 128).abs() * ra * ra;
          BigFloat v = e.apply(a, i).abs();
          if (m.is_zero()) continue;
          long loss = v.is_zero() ? 128 : m.exponent() - v.exponent();
          guard = std::max(guard, loss);
        }
      }
      auto source = [&h, &k, i, guard](long bits) {
        Embeddings e(*k, bits + 16 + guard);
        std::vector<BigComplex> c;
        for (const auto& a : h.coeffs()) c.push_back(e.apply(a, i).with_precision(bits));
        return c;
      };
      images[i] = complex_roots(source, h.degree(), work, config.numeric);
    }
  } catch (const PrecisionExhausted&) {
    result.complete = false;
    return result;
  }

  std::vector<BigComplex> first;
  for (const auto& z : images[0])
    if (is_real_root(z)) first.push_back(z);
  std::vector<BigComplex> second, third;
  if (k->totally_real()) {
    for (const auto& z : images[1])
      if (is_real_root(z)) second.push_back(z);
    for (const auto& z : images[2])
      if (is_real_root(z)) third.push_back(z);
  } else {
    second = images[1];
  }

  const long n_first = static_cast<long>(first.size());
  std::vector<std::vector<Candidate>> per_index(first.size());
  auto work_on = [&](long i) {
    auto iu = static_cast<std::size_t>(i);
    for (const auto& v1 : second) {
      if (k->totally_real()) {
        for (const auto& v2 : third) {
          auto c = reconstruct_tuple({first[iu], v1, v2}, L, config.height_bound);
          if (c) per_index[iu].push_back(*c);
        }
      } else {
        auto c = reconstruct_tuple({first[iu], v1, v1.conj()}, L, config.height_bound);
        if (c) per_index[iu].push_back(*c);
      }
    }
  };
  if (config.parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n_first; ++i) work_on(i);
  } else {
    for (long i = 0; i < n_first; ++i) work_on(i);
  }

  for (const auto& bucket : per_index)
    for (const auto& c : bucket) {
      FieldElement x = k->element(c.coords[0], c.coords[1], c.coords[2]);
      if (!h.eval(x).is_zero()) continue;
      if (std::find(result.roots.begin(), result.roots.end(), x) == result.roots.end()) result.roots.push_back(x);
    }
  std::sort(result.roots.begin(), result.roots.end(), embedding1_less);
  return result;
}

FieldRootSearch roots_in_field(const QPoly& h, const FieldRef& k, const FieldRootConfig& config) {
  return roots_in_field(to_field(h, k), config);
}

std::set<int> subset_sums(const std::vector<int>& parts) {
  int total = 0;
  for (int d : parts) total += d;
  std::vector<char> reach(static_cast<std::size_t>(total) + 1, 0);
  reach[0] = 1;
  for (int d : parts)
    for (int s = total; s >= d; --s)
      if (reach[static_cast<std::size_t>(s - d)]) reach[static_cast<std::size_t>(s)] = 1;
  std::set<int> out;
  for (int s = 1; s <= total; ++s)
    if (reach[static_cast<std::size_t>(s)]) out.insert(s);
  return out;
}

DegreeCertificate factor_degree_sets(const QPoly& h, int prime_count, int lift_up_to) {
  if (h.degree() < 1) throw PreconditionFailed("factor_degree_sets needs deg h >= 1");
  DegreeCertificate cert;
  cert.poly = h;
  const int deg = static_cast<int>(h.degree());
  for (int d = 1; d <= deg; ++d) cert.possible_factor_degrees.insert(d);
  auto a = primitive_integer_form(h);
  std::vector<std::vector<int>> patterns;
  std::uint64_t p = 4;
  while (static_cast<int>(cert.primes_used.size()) < prime_count) {
    p = zp::next_prime(p);
    if (p > kDdfPrimeSearchBound)
      throw NoGoodPrimes("only " + std::to_string(cert.primes_used.size()) + " admissible primes below bound");
    const Integer P(static_cast<unsigned long>(p));
    if (mod_pos(a.back(), P) == 0) continue;
    zp::Poly red;
    for (const auto& c : a) red.push_back(mod_pos(c, P).get_ui());
    zp::trim(red);
    if (!zp::is_squarefree(red, p)) continue;
    std::vector<int> parts;
    for (const auto& [d, g] : zp::ddf(red, p))
      for (long n = 0; n < zp::degree(g) / d; ++n) parts.push_back(d);
    if (parts.size() == 1) cert.irreducible_certified = true;
    auto sums = subset_sums(parts);
    std::set<int> inter;
    std::set_intersection(cert.possible_factor_degrees.begin(), cert.possible_factor_degrees.end(), sums.begin(),
                          sums.end(), std::inserter(inter, inter.begin()));
    cert.possible_factor_degrees = std::move(inter);
    cert.primes_used.push_back(p);
    patterns.push_back(std::move(parts));
  }

  std::set<int> targets;
  for (int d : cert.possible_factor_degrees)
    if (d <= lift_up_to && d < deg) targets.insert(d);
  if (!targets.empty()) {
    std::size_t best = 0;
    std::size_t fewest = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = 0; i < patterns.size(); ++i) {
      std::size_t n = count_degree_subsets(patterns[i], targets, kLiftCandidateCap + 1);
      if (n < fewest) {
        fewest = n;
        best = i;
      }
    }
    auto search = small_factor_search(h, targets, cert.primes_used[best]);
    if (search.searched) {
      cert.lift_prime = search.prime;
      int found = search.factor ? static_cast<int>(search.factor->degree()) : lift_up_to + 1;
      for (int d : targets)
        if (d < found) {
          cert.possible_factor_degrees.erase(d);
          cert.lifted_exclusions.insert(d);
        }
      cert.small_factor = search.factor;
    }
  }
  if (cert.possible_factor_degrees.size() == 1 && *cert.possible_factor_degrees.begin() == deg)
    cert.irreducible_certified = true;
  cert.certified_no_factor_up_to = *cert.possible_factor_degrees.begin() - 1;
  return cert;
}

}  // namespace cubtors
