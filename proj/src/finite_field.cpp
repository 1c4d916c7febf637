#include "cubtors/finite_field.hpp"

#include <random>
#include <sstream>

#include "cubtors/errors.hpp"

namespace cubtors {

namespace zp {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1u) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1u;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw DivisionByZero("inverse of 0 mod " + std::to_string(p));
  return powmod(a, p - 2, p);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (n % d == 0) return n == d;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1u) == 0) {
    d >>= 1u;
    ++s;
  }
  for (std::uint64_t a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t next_prime(std::uint64_t n) {
  ++n;
  while (!is_prime(n)) ++n;
  return n;
}

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

long degree(const Poly& a) { return static_cast<long>(a.size()) - 1; }

Poly add(const Poly& a, const Poly& b, std::uint64_t p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::uint64_t x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
    r[i] = (x + y) % p;
  }
  trim(r);
  return r;
}

Poly sub(const Poly& a, const Poly& b, std::uint64_t p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::uint64_t x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
    r[i] = (x + p - y) % p;
  }
  trim(r);
  return r;
}

Poly mul(const Poly& a, const Poly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  std::vector<unsigned __int128> acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] += static_cast<unsigned __int128>(a[i]) * b[j];
    // Keep the accumulators from overflowing on long rows.
    if ((i & 63u) == 63u)
      for (auto& v : acc) v %= p;
  }
  Poly r(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) r[i] = static_cast<std::uint64_t>(acc[i] % p);
  trim(r);
  return r;
}

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b, std::uint64_t p) {
  if (b.empty()) throw DivisionByZero("zp polynomial division by zero");
  Poly r = a;
  trim(r);
  if (r.size() < b.size()) return {{}, r};
  Poly q(r.size() - b.size() + 1, 0);
  std::uint64_t inv_lc = invmod(b.back(), p);
  const long db = degree(b);
  for (long i = degree(r); i >= db; --i) {
    auto iu = static_cast<std::size_t>(i);
    std::uint64_t c = mulmod(r[iu], inv_lc, p);
    q[iu - static_cast<std::size_t>(db)] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::size_t k = iu - static_cast<std::size_t>(db) + j;
      r[k] = (r[k] + p - mulmod(c, b[j], p)) % p;
    }
  }
  r.resize(b.size() - 1);
  trim(r);
  trim(q);
  return {q, r};
}

Poly mod(const Poly& a, const Poly& b, std::uint64_t p) { return divrem(a, b, p).second; }

Poly monic(const Poly& a, std::uint64_t p) {
  if (a.empty()) return a;
  std::uint64_t inv = invmod(a.back(), p);
  Poly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mulmod(a[i], inv, p);
  return r;
}

Poly gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

Poly derivative(const Poly& a, std::uint64_t p) {
  Poly r;
  for (std::size_t i = 1; i < a.size(); ++i) r.push_back(mulmod(a[i], i % p, p));
  trim(r);
  return r;
}

Poly powmod(const Poly& base, std::uint64_t e, const Poly& m, std::uint64_t p) {
  Poly r = mod({1}, m, p);
  Poly b = mod(base, m, p);
  while (e) {
    if (e & 1u) r = mod(mul(r, b, p), m, p);
    e >>= 1u;
    if (e) b = mod(mul(b, b, p), m, p);
  }
  return r;
}

std::uint64_t eval(const Poly& a, std::uint64_t x, std::uint64_t p) {
  std::uint64_t acc = 0;
  for (std::size_t i = a.size(); i-- > 0;) acc = (mulmod(acc, x, p) + a[i]) % p;
  return acc;
}

bool is_squarefree(const Poly& a, std::uint64_t p) {
  Poly d = derivative(a, p);
  if (d.empty()) return degree(a) <= 0;
  return degree(gcd(a, d, p)) == 0;
}

namespace {

// Splits a product of distinct linear factors into its roots.
void split_linear(const Poly& g, std::uint64_t p, std::mt19937_64& rng, std::vector<std::uint64_t>& out) {
  long d = degree(g);
  if (d <= 0) return;
  if (d == 1) {
    Poly m = monic(g, p);
    out.push_back((p - m[0]) % p);
    return;
  }
  std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
  while (true) {
    Poly h = powmod(Poly{dist(rng), 1}, (p - 1) / 2, g, p);
    Poly t = gcd(g, sub(h, {1}, p), p);
    long dt = degree(t);
    if (dt > 0 && dt < d) {
      split_linear(t, p, rng, out);
      split_linear(divrem(g, t, p).first, p, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<std::uint64_t> roots(const Poly& a, std::uint64_t p) {
  std::vector<std::uint64_t> out;
  if (degree(a) <= 0) return out;
  if (p <= 4096) {
    for (std::uint64_t x = 0; x < p; ++x)
      if (eval(a, x, p) == 0) out.push_back(x);
    return out;
  }
  Poly xp = powmod(Poly{0, 1}, p, a, p);
  Poly g = gcd(a, sub(xp, Poly{0, 1}, p), p);
  if (degree(g) <= 0) return out;
  if (g[0] == 0) {
    out.push_back(0);
    g = divrem(g, Poly{0, 1}, p).first;
  }
  std::mt19937_64 rng(0x5eedULL + p);
  split_linear(g, p, rng, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<int, Poly>> ddf(const Poly& f0, std::uint64_t p) {
  std::vector<std::pair<int, Poly>> out;
  Poly f = monic(f0, p);
  Poly h = Poly{0, 1};
  int i = 1;
  while (degree(f) >= 2 * i) {
    h = powmod(h, p, f, p);
    Poly g = gcd(f, sub(h, Poly{0, 1}, p), p);
    if (degree(g) > 0) {
      out.emplace_back(i, g);
      f = divrem(f, g, p).first;
      h = mod(h, f, p);
    }
    ++i;
  }
  if (degree(f) > 0) out.emplace_back(static_cast<int>(degree(f)), f);
  return out;
}

Poly from_rational(const QPoly& h, std::uint64_t p) {
  Poly r;
  for (const auto& c : h.coeffs()) r.push_back(rational_mod(c, p));
  trim(r);
  return r;
}

}  // namespace zp

FiniteField::FiniteField(Token, kernels::PackedField packed, zp::Poly modulus)
    : packed_(packed), modulus_(std::move(modulus)) {}

FFRef FiniteField::make(std::uint64_t p, const zp::Poly& g0) {
  if (!zp::is_prime(p)) throw ReducibleModulus(std::to_string(p) + " is not prime");
  zp::Poly g = g0;
  for (auto& c : g) c %= p;
  zp::trim(g);
  long k = zp::degree(g);
  if (k < 1 || k > 3) throw ReducibleModulus("modulus degree must be 1..3");
  g = zp::monic(g, p);
  if (k >= 2 && !zp::roots(g, p).empty()) throw ReducibleModulus("modulus has a root mod " + std::to_string(p));
  unsigned __int128 q = 1;
  for (long i = 0; i < k; ++i) q *= p;
  if (q >= (static_cast<unsigned __int128>(1) << 32)) throw TooLarge("field size exceeds 2^32");
  kernels::PackedField pf;
  pf.p = p;
  pf.k = static_cast<int>(k);
  pf.q = static_cast<std::uint64_t>(q);
  for (long i = 0; i < k; ++i) pf.m[i] = g[static_cast<std::size_t>(i)];
  return std::make_shared<const FiniteField>(Token{}, pf, g);
}

FFRef FiniteField::prime_field(std::uint64_t p) { return make(p, {0, 1}); }

FFRef FiniteField::extension(std::uint64_t p, int k) {
  if (k == 1) return prime_field(p);
  // Enumerate monic polynomials x^k + ... in lexicographic order of the low coefficients.
  std::uint64_t total = 1;
  for (int i = 0; i < k; ++i) total *= p;
  for (std::uint64_t n = 0; n < total; ++n) {
    zp::Poly g(static_cast<std::size_t>(k) + 1, 0);
    std::uint64_t t = n;
    for (int i = 0; i < k; ++i) {
      g[static_cast<std::size_t>(i)] = t % p;
      t /= p;
    }
    g[static_cast<std::size_t>(k)] = 1;
    if (g[0] != 0 && zp::roots(g, p).empty()) return make(p, g);
  }
  throw ReducibleModulus("no irreducible modulus found");
}

FFElement FiniteField::element(std::uint32_t index) const {
  if (index >= packed_.q) throw std::out_of_range("finite field index out of range");
  return FFElement(this, index);
}

FFElement FiniteField::from_int(long n) const {
  long r = n % static_cast<long>(packed_.p);
  if (r < 0) r += static_cast<long>(packed_.p);
  return FFElement(this, static_cast<std::uint32_t>(r));
}

FFElement FiniteField::from_prime(std::uint64_t v) const { return FFElement(this, static_cast<std::uint32_t>(v % packed_.p)); }

FFElement FiniteField::generator() const {
  if (packed_.k == 1) return from_prime((packed_.p - modulus_[0]) % packed_.p);
  return FFElement(this, static_cast<std::uint32_t>(packed_.p));
}

std::array<std::uint64_t, 3> FFElement::coords() const {
  std::array<std::uint64_t, 3> c{0, 0, 0};
  std::uint64_t v = v_;
  for (int i = 0; i < f_->degree(); ++i) {
    c[static_cast<std::size_t>(i)] = v % f_->p();
    v /= f_->p();
  }
  return c;
}

FFElement FFElement::operator-() const { return FFElement(f_, f_->packed().sub(0, v_)); }
FFElement operator+(const FFElement& a, const FFElement& b) { return FFElement(a.f_, a.f_->packed().add(a.v_, b.v_)); }
FFElement operator-(const FFElement& a, const FFElement& b) { return FFElement(a.f_, a.f_->packed().sub(a.v_, b.v_)); }
FFElement operator*(const FFElement& a, const FFElement& b) { return FFElement(a.f_, a.f_->packed().mul(a.v_, b.v_)); }

FFElement FFElement::pow(std::uint64_t e) const {
  FFElement r = f_->from_int(1), b = *this;
  while (e) {
    if (e & 1u) r = r * b;
    e >>= 1u;
    if (e) b = b * b;
  }
  return r;
}

FFElement FFElement::inv() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in F_q");
  return pow(f_->size() - 2);
}

int FFElement::legendre() const {
  if (is_zero()) return 0;
  return pow((f_->size() - 1) / 2) == f_->from_int(1) ? 1 : -1;
}

std::string FFElement::to_string() const {
  if (f_->degree() == 1) return std::to_string(v_);
  auto c = coords();
  std::ostringstream os;
  os << "[" << c[0];
  for (int i = 1; i < f_->degree(); ++i) os << "," << c[static_cast<std::size_t>(i)];
  os << "]";
  return os.str();
}

FFRef make_residue_field(std::uint64_t p, const zp::Poly& g) { return FiniteField::make(p, g); }

std::vector<FFElement> enumerate(const FFRef& f) {
  if (f->size() > kEnumerationCap) throw TooLarge("field of size " + std::to_string(f->size()));
  std::vector<FFElement> out;
  out.reserve(f->size());
  for (std::uint64_t i = 0; i < f->size(); ++i) out.push_back(f->element(static_cast<std::uint32_t>(i)));
  return out;
}

int ff_quadratic_count(const FFElement& a, const FFElement& b) {
  const FiniteField* f = a.field();
  if (f->p() == 2) {
    int n = 0;
    for (std::uint64_t i = 0; i < f->size(); ++i) {
      FFElement y = f->element(static_cast<std::uint32_t>(i));
      if (y * y + a * y == b) ++n;
    }
    return n;
  }
  FFElement disc = a * a + f->from_int(4) * b;
  return 1 + disc.legendre();
}

std::vector<std::pair<int, FFPoly>> ff_ddf(const FFPoly& h) {
  const auto& ctx = h.context();
  if (ctx->degree() != 1) throw std::invalid_argument("ff_ddf works over prime fields");
  const std::uint64_t p = ctx->p();
  zp::Poly a;
  for (const auto& c : h.coeffs()) a.push_back(c.index());
  if (!zp::is_squarefree(a, p)) throw NotSquarefree("ff_ddf input not squarefree mod " + std::to_string(p));
  std::vector<std::pair<int, FFPoly>> out;
  for (auto& [d, g] : zp::ddf(a, p)) {
    std::vector<FFElement> v;
    for (auto c : g) v.push_back(ctx->from_prime(c));
    out.emplace_back(d, FFPoly(ctx, std::move(v)));
  }
  return out;
}

std::vector<FFElement> ff_roots(const FFPoly& h) {
  std::vector<FFElement> out;
  if (h.degree() < 1) return out;
  const auto& ctx = h.context();
  if (ctx->degree() == 1 && ctx->p() > kEnumerationCap) {
    zp::Poly a;
    for (const auto& c : h.coeffs()) a.push_back(c.index());
    for (auto r : zp::roots(a, ctx->p())) out.push_back(ctx->from_prime(r));
    return out;
  }
  for (const auto& x : enumerate(ctx))
    if (h.eval(x).is_zero()) out.push_back(x);
  return out;
}

}  // namespace cubtors
