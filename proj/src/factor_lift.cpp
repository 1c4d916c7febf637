// Exclusion of small factors over Q: factor modulo a prime, Hensel-lift the
// factorization, and trial-divide every product of lifted factors whose
// degree is small enough.

#include <algorithm>
#include <functional>
#include <random>

#include "cubtors/errors.hpp"
#include "cubtors/finite_field.hpp"
#include "cubtors/poly_roots.hpp"

namespace cubtors {

namespace {

using ZPoly = std::vector<Integer>;

Integer mod_pos(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

zp::Poly to_zp(const ZPoly& a, std::uint64_t p) {
  const Integer P(static_cast<unsigned long>(p));
  zp::Poly r;
  for (const auto& c : a) r.push_back(mod_pos(c, P).get_ui());
  zp::trim(r);
  return r;
}

ZPoly from_zp(const zp::Poly& a) {
  ZPoly r;
  for (auto c : a) r.emplace_back(static_cast<unsigned long>(c));
  return r;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b, const Integer& m) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  for (auto& c : r) c = mod_pos(c, m);
  return r;
}

// s, t with s a + t b = 1 over F_p, for coprime a and b.
std::pair<zp::Poly, zp::Poly> xgcd(const zp::Poly& a, const zp::Poly& b, std::uint64_t p) {
  zp::Poly r0 = a, r1 = b, s0 = {1}, s1 = {}, t0 = {}, t1 = {1};
  while (!r1.empty()) {
    auto [q, r] = zp::divrem(r0, r1, p);
    r0 = std::move(r1);
    r1 = std::move(r);
    zp::Poly s2 = zp::sub(s0, zp::mul(q, s1, p), p);
    zp::Poly t2 = zp::sub(t0, zp::mul(q, t1, p), p);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (zp::degree(r0) != 0) throw PreconditionFailed("xgcd: polynomials are not coprime");
  std::uint64_t inv = zp::invmod(r0[0], p);
  for (auto& c : s0) c = zp::mulmod(c, inv, p);
  for (auto& c : t0) c = zp::mulmod(c, inv, p);
  zp::trim(s0);
  zp::trim(t0);
  return {s0, t0};
}

// f = g h mod p (g, h monic, coprime) lifted to f = g h mod p^k = m, where f is
// monic modulo m.
std::pair<ZPoly, ZPoly> hensel_lift(const ZPoly& f, const zp::Poly& g0, const zp::Poly& h0, std::uint64_t p,
                                    const Integer& m) {
  auto [s, t] = xgcd(g0, h0, p);
  ZPoly g = from_zp(g0), h = from_zp(h0);
  const Integer P(static_cast<unsigned long>(p));
  for (Integer pj = P; pj < m; pj *= P) {
    ZPoly gh = zmul(g, h, m);
    ZPoly e(f.size(), Integer(0));
    for (std::size_t i = 0; i < f.size(); ++i) {
      Integer d = mod_pos(f[i] - (i < gh.size() ? gh[i] : Integer(0)), m);
      e[i] = d / pj;
    }
    zp::Poly ep = to_zp(e, p);
    if (ep.empty()) continue;
    auto [q, r] = zp::divrem(zp::mul(t, ep, p), g0, p);
    zp::Poly H = zp::add(zp::mul(s, ep, p), zp::mul(q, h0, p), p);
    for (std::size_t i = 0; i < r.size(); ++i) g[i] = mod_pos(g[i] + pj * r[i], m);
    for (std::size_t i = 0; i < H.size(); ++i) h[i] = mod_pos(h[i] + pj * H[i], m);
  }
  return {g, h};
}

zp::Poly powmod_big(const zp::Poly& a, const Integer& e, const zp::Poly& m, std::uint64_t p) {
  zp::Poly result = {1}, base = zp::mod(a, m, p);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = zp::mod(zp::mul(result, result, p), m, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = zp::mod(zp::mul(result, base, p), m, p);
  }
  return result;
}

// Cantor-Zassenhaus splitting of a product of distinct degree-d irreducibles.
void edf(const zp::Poly& f, int d, std::uint64_t p, std::mt19937_64& rng, std::vector<zp::Poly>& out) {
  const long n = zp::degree(f);
  if (n == d) {
    out.push_back(f);
    return;
  }
  Integer e;
  mpz_ui_pow_ui(e.get_mpz_t(), p, static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  std::uniform_int_distribution<std::uint64_t> coef(0, p - 1);
  while (true) {
    zp::Poly a(static_cast<std::size_t>(n));
    for (auto& c : a) c = coef(rng);
    zp::trim(a);
    if (zp::degree(a) < 1) continue;
    zp::Poly b = powmod_big(a, e, f, p);
    b = zp::sub(b, {1}, p);
    zp::Poly u = zp::gcd(f, b, p);
    long du = zp::degree(u);
    if (du > 0 && du < n) {
      edf(u, d, p, rng, out);
      edf(zp::divrem(f, u, p).first, d, p, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<zp::Poly> zp_factor(const zp::Poly& f, std::uint64_t p) {
  if (p == 2) throw PreconditionFailed("zp_factor needs an odd prime");
  zp::Poly m = zp::monic(f, p);
  std::mt19937_64 rng(0x5eed + p);
  std::vector<zp::Poly> out;
  for (const auto& [d, g] : zp::ddf(m, p)) edf(g, d, p, rng, out);
  std::sort(out.begin(), out.end(), [](const zp::Poly& a, const zp::Poly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  return out;
}

std::size_t count_degree_subsets(const std::vector<int>& parts, const std::set<int>& targets, std::size_t cap) {
  if (targets.empty()) return 0;
  const int top = *targets.rbegin();
  std::vector<std::size_t> ways(static_cast<std::size_t>(top) + 1, 0);
  ways[0] = 1;
  for (int d : parts)
    for (int s = top; s >= d; --s) ways[static_cast<std::size_t>(s)] = std::min(cap, ways[static_cast<std::size_t>(s)] + ways[static_cast<std::size_t>(s - d)]);
  std::size_t total = 0;
  for (int t : targets)
    if (t >= 1 && t <= top) total = std::min(cap, total + ways[static_cast<std::size_t>(t)]);
  return total;
}

SmallFactorSearch small_factor_search(const QPoly& h, const std::set<int>& degrees, std::uint64_t p,
                                      std::size_t candidate_cap) {
  SmallFactorSearch out;
  out.prime = p;
  ZPoly F = primitive_integer_form(h);
  const Integer P(static_cast<unsigned long>(p));
  const Integer& lc = F.back();
  if (mod_pos(lc, P) == 0) throw PreconditionFailed("prime divides the leading coefficient");
  zp::Poly fp = to_zp(F, p);
  if (!zp::is_squarefree(fp, p)) throw PreconditionFailed("not squarefree modulo the prime");
  if (degrees.empty()) {
    out.searched = true;
    return out;
  }
  auto factors = zp_factor(fp, p);
  std::vector<int> parts;
  for (const auto& g : factors) parts.push_back(static_cast<int>(zp::degree(g)));
  out.candidates = count_degree_subsets(parts, degrees, candidate_cap + 1);
  if (out.candidates > candidate_cap) return out;

  // Any factor G of F of degree m has |coefficients| <= 2^m |F|_2; the lifted
  // product equals (lc / lc(G)) G, so m = lc 2^m |F|_2 bounds it.
  Integer norm2 = 0;
  for (const auto& c : F) norm2 += c * c;
  Integer norm = sqrt(norm2) + 1;
  Integer bound = abs(lc) * norm;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<unsigned long>(*degrees.rbegin()));
  Integer M = P;
  while (M <= 2 * bound) M *= P;

  // Monic target lc^-1 F modulo M.
  Integer lc_inv;
  mpz_invert(lc_inv.get_mpz_t(), mod_pos(lc, M).get_mpz_t(), M.get_mpz_t());
  ZPoly cur(F.size());
  for (std::size_t i = 0; i < F.size(); ++i) cur[i] = mod_pos(F[i] * lc_inv, M);

  std::vector<ZPoly> lifted;
  for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
    zp::Poly rest = {1};
    for (std::size_t j = i + 1; j < factors.size(); ++j) rest = zp::mul(rest, factors[j], p);
    auto [g, r] = hensel_lift(cur, factors[i], rest, p, M);
    lifted.push_back(std::move(g));
    cur = std::move(r);
  }
  lifted.push_back(cur);

  const Integer half = M / 2;
  QPoly hq(RationalsTag{}, std::vector<Rational>(F.begin(), F.end()));
  std::vector<std::size_t> chosen;
  // Depth-first over subsets in index order; stops at the first true factor.
  std::function<bool(std::size_t, int, int)> search = [&](std::size_t start, int deg, int target) -> bool {
    if (deg == target) {
      ZPoly G = {mod_pos(lc, M)};
      for (auto i : chosen) G = zmul(G, lifted[i], M);
      std::vector<Rational> gc;
      for (auto& c : G) gc.emplace_back(c > half ? Integer(c - M) : c);
      QPoly cand(RationalsTag{}, std::move(gc));
      auto prim = primitive_integer_form(cand);
      // Constant terms must divide before a full trial division.
      if (F.front() != 0 && prim.front() != 0 && F.front() % prim.front() != 0) return false;
      QPoly g(RationalsTag{}, std::vector<Rational>(prim.begin(), prim.end()));
      if (poly_divrem(hq, g).remainder.is_zero()) {
        out.factor = g;
        return true;
      }
      return false;
    }
    for (std::size_t i = start; i < lifted.size(); ++i) {
      int d = parts[i];
      if (deg + d > target) continue;
      chosen.push_back(i);
      bool found = search(i + 1, deg + d, target);
      chosen.pop_back();
      if (found) return true;
    }
    return false;
  };
  for (int target : degrees)
    if (search(0, 0, target)) break;
  out.searched = true;
  return out;
}

}  // namespace cubtors
