#pragma once

// Elliptic curves in long Weierstrass form over an exact coefficient domain,
// affine group law, and division polynomials in x.

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cubtors/errors.hpp"
#include "cubtors/polynomial.hpp"

namespace cubtors {

template <class F>
class CurvePoint {
 public:
  CurvePoint() = default;
  CurvePoint(F x, F y) : xy_(std::make_pair(std::move(x), std::move(y))) {}
  static CurvePoint infinity() { return {}; }

  bool is_infinity() const { return !xy_.has_value(); }
  const F& x() const { return xy_->first; }
  const F& y() const { return xy_->second; }

  friend bool operator==(const CurvePoint& a, const CurvePoint& b) {
    if (a.is_infinity() || b.is_infinity()) return a.is_infinity() == b.is_infinity();
    return a.x() == b.x() && a.y() == b.y();
  }

  std::string to_string() const {
    if (is_infinity()) return "O";
    return "(" + Domain<F>::to_string(x()) + ", " + Domain<F>::to_string(y()) + ")";
  }

 private:
  std::optional<std::pair<F, F>> xy_;
};

/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.
template <class F>
class WeierstrassCurve {
 public:
  using D = Domain<F>;
  using Context = typename D::Context;

  /// Throws SingularCurve when the discriminant vanishes.
  WeierstrassCurve(Context ctx, std::array<F, 5> a) : ctx_(std::move(ctx)), a_(std::move(a)) {
    const F &a1 = a_[0], &a2 = a_[1], &a3 = a_[2], &a4 = a_[3], &a6 = a_[4];
    auto n = [this](long k) { return D::from_int(ctx_, k); };
    b2_ = a1 * a1 + n(4) * a2;
    b4_ = n(2) * a4 + a1 * a3;
    b6_ = a3 * a3 + n(4) * a6;
    // Equal to (b2 b6 - b4^2) / 4 but free of division.
    b8_ = a1 * a1 * a6 + n(4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    c4_ = b2_ * b2_ - n(24) * b4_;
    c6_ = -(b2_ * b2_ * b2_) + n(36) * b2_ * b4_ - n(216) * b6_;
    disc_ = -(b2_ * b2_ * b8_) - n(8) * b4_ * b4_ * b4_ - n(27) * b6_ * b6_ + n(9) * b2_ * b4_ * b6_;
    if (D::is_zero(disc_)) throw SingularCurve("discriminant is zero");
    if constexpr (D::is_field) j_ = D::div(c4_ * c4_ * c4_, disc_);
  }

  const Context& context() const { return ctx_; }
  const std::array<F, 5>& a() const { return a_; }
  const F& a1() const { return a_[0]; }
  const F& a2() const { return a_[1]; }
  const F& a3() const { return a_[2]; }
  const F& a4() const { return a_[3]; }
  const F& a6() const { return a_[4]; }
  const F& b2() const { return b2_; }
  const F& b4() const { return b4_; }
  const F& b6() const { return b6_; }
  const F& b8() const { return b8_; }
  const F& c4() const { return c4_; }
  const F& c6() const { return c6_; }
  const F& disc() const { return disc_; }
  /// c4^3 / disc; absent over coefficient rings that are not fields.
  const std::optional<F>& j() const { return j_; }

  F zero() const { return D::zero(ctx_); }
  F from_int(long n) const { return D::from_int(ctx_, n); }

  /// Right-hand side minus left-hand side at (x, y).
  F equation(const F& x, const F& y) const {
    return x * x * x + a2() * x * x + a4() * x + a6() - y * y - a1() * x * y - a3() * y;
  }
  bool on_curve(const CurvePoint<F>& P) const { return P.is_infinity() || D::is_zero(equation(P.x(), P.y())); }

  /// 4x^3 + b2 x^2 + 2 b4 x + b6, the square of psi_2 as a polynomial in x.
  Polynomial<F> two_torsion_poly() const { return Polynomial<F>(ctx_, {b6_, from_int(2) * b4_, b2_, from_int(4)}); }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < 5; ++i) s += (i ? ", " : "") + D::to_string(a_[i]);
    return s + "]";
  }

 private:
  Context ctx_;
  std::array<F, 5> a_;
  F b2_{a_[0]}, b4_{a_[0]}, b6_{a_[0]}, b8_{a_[0]}, c4_{a_[0]}, c6_{a_[0]}, disc_{a_[0]};
  std::optional<F> j_;
};

template <class F>
CurvePoint<F> negate(const WeierstrassCurve<F>& E, const CurvePoint<F>& P) {
  if (P.is_infinity()) return P;
  return {P.x(), -P.y() - E.a1() * P.x() - E.a3()};
}

/// Chord-and-tangent addition in affine coordinates.
template <class F>
CurvePoint<F> add_points(const WeierstrassCurve<F>& E, const CurvePoint<F>& P, const CurvePoint<F>& Q) {
  using D = Domain<F>;
  if (P.is_infinity()) return Q;
  if (Q.is_infinity()) return P;
  F lambda = E.zero(), nu = E.zero();
  if (P.x() == Q.x()) {
    F s = P.y() + Q.y() + E.a1() * Q.x() + E.a3();
    if (D::is_zero(s)) return CurvePoint<F>::infinity();
    const F& x = P.x();
    lambda = D::div(E.from_int(3) * x * x + E.from_int(2) * E.a2() * x + E.a4() - E.a1() * P.y(), s);
    nu = D::div(-(x * x * x) + E.a4() * x + E.from_int(2) * E.a6() - E.a3() * P.y(), s);
  } else {
    F dx = Q.x() - P.x();
    lambda = D::div(Q.y() - P.y(), dx);
    nu = D::div(P.y() * Q.x() - Q.y() * P.x(), dx);
  }
  F x3 = lambda * lambda + E.a1() * lambda - E.a2() - P.x() - Q.x();
  F y3 = -(lambda + E.a1()) * x3 - nu - E.a3();
  return {std::move(x3), std::move(y3)};
}

/// nP by double-and-add; negative n negates.
template <class F>
CurvePoint<F> scalar_mul(const WeierstrassCurve<F>& E, long n, const CurvePoint<F>& P) {
  CurvePoint<F> base = n < 0 ? negate(E, P) : P;
  unsigned long m = n < 0 ? static_cast<unsigned long>(-(n + 1)) + 1 : static_cast<unsigned long>(n);
  CurvePoint<F> acc;
  while (m) {
    if (m & 1u) acc = add_points(E, acc, base);
    m >>= 1u;
    if (m) base = add_points(E, base, base);
  }
  return acc;
}

/// Least n <= bound with nP = O, by repeated addition; nullopt when none.
template <class F>
std::optional<long> point_order(const WeierstrassCurve<F>& E, const CurvePoint<F>& P, long bound) {
  CurvePoint<F> Q = P;
  for (long n = 1; n <= bound; ++n) {
    if (Q.is_infinity()) return n;
    Q = add_points(E, Q, P);
  }
  return std::nullopt;
}

namespace detail {
inline std::vector<std::pair<long, int>> factor_small(long n) {
  std::vector<std::pair<long, int>> f;
  for (long p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) f.emplace_back(p, e);
  }
  if (n > 1) f.emplace_back(n, 1);
  return f;
}
}  // namespace detail

/// Order of P given a multiple of every torsion order (e.g. a reduction
/// bound): if B P != O the point has infinite order (nullopt); otherwise the
/// order is found by stripping prime factors of B.
template <class F>
std::optional<long> point_order_with_bound(const WeierstrassCurve<F>& E, const CurvePoint<F>& P, long group_bound) {
  if (group_bound < 1) return std::nullopt;
  if (!scalar_mul(E, group_bound, P).is_infinity()) return std::nullopt;
  long n = group_bound;
  for (auto [p, e] : detail::factor_small(group_bound)) {
    for (int i = 0; i < e; ++i) {
      if (scalar_mul(E, n / p, P).is_infinity())
        n /= p;
      else
        break;
    }
  }
  return n;
}

/// psi_n in x alone: psi_n for odd n and psi_n / psi_2 for even n.
template <class F>
struct DivisionPoly {
  long n = 0;
  Polynomial<F> f;
  /// True when n is even, so psi_n = psi_2 * f with psi_2^2 = 4x^3 + b2 x^2 + 2 b4 x + b6.
  bool even = false;
};

/// The family f_0 .. f_n of x-only division polynomials.
template <class F>
std::vector<Polynomial<F>> division_polys(const WeierstrassCurve<F>& E, long n) {
  using P = Polynomial<F>;
  const auto& ctx = E.context();
  auto c = [&](long k) { return E.from_int(k); };
  std::vector<P> f;
  f.reserve(static_cast<std::size_t>(std::max<long>(n, 4)) + 1);
  f.push_back(P(ctx));
  f.push_back(P::constant(ctx, c(1)));
  f.push_back(P::constant(ctx, c(1)));
  const F &b2 = E.b2(), &b4 = E.b4(), &b6 = E.b6(), &b8 = E.b8();
  f.push_back(P(ctx, {b8, c(3) * b6, c(3) * b4, b2, c(3)}));
  f.push_back(P(ctx, {b4 * b8 - b6 * b6, b2 * b8 - b4 * b6, c(10) * b8, c(10) * b6, c(5) * b4, b2, c(2)}));
  const P F2 = E.two_torsion_poly();
  const P F4 = F2 * F2;
  for (long k = 5; k <= n; ++k) {
    long m = k / 2;
    auto at = [&](long i) -> const P& { return f[static_cast<std::size_t>(i)]; };
    if (k % 2 == 1) {
      P u = at(m + 2) * poly_pow(at(m), 3);
      P v = at(m - 1) * poly_pow(at(m + 1), 3);
      f.push_back(m % 2 == 0 ? F4 * u - v : u - F4 * v);
    } else {
      P w = at(m + 2) * at(m - 1) * at(m - 1) - at(m - 2) * at(m + 1) * at(m + 1);
      f.push_back(at(m) * w);
    }
  }
  f.resize(static_cast<std::size_t>(n) + 1, P(ctx));
  return f;
}

template <class F>
DivisionPoly<F> division_poly(const WeierstrassCurve<F>& E, long n) {
  if (n < 1) throw PreconditionFailed("division_poly needs n >= 1");
  auto f = division_polys(E, n);
  return {n, f[static_cast<std::size_t>(n)], n % 2 == 0};
}

/// psi_n evaluated at an affine point: f_n(x) for odd n, (2y + a1 x + a3) f_n(x) for even n.
template <class F>
F psi_at(const WeierstrassCurve<F>& E, const DivisionPoly<F>& d, const CurvePoint<F>& P) {
  F v = d.f.eval(P.x());
  if (d.even) v = (E.from_int(2) * P.y() + E.a1() * P.x() + E.a3()) * v;
  return v;
}

/// Numerator and denominator of x([l]X) as polynomials in x(X).
template <class F>
std::pair<Polynomial<F>, Polynomial<F>> multiplication_x_map(const WeierstrassCurve<F>& E, long l) {
  if (l < 2) throw PreconditionFailed("multiplication map needs l >= 2");
  using P = Polynomial<F>;
  auto f = division_polys(E, l + 1);
  const auto& ctx = E.context();
  const P x = P::x(ctx);
  const P F2 = E.two_torsion_poly();
  const P& fl = f[static_cast<std::size_t>(l)];
  const P prod = f[static_cast<std::size_t>(l - 1)] * f[static_cast<std::size_t>(l + 1)];
  if (l % 2 == 1) {
    P den = fl * fl;
    return {x * den - F2 * prod, den};
  }
  P den = F2 * fl * fl;
  return {x * den - prod, den};
}

/// Numerator of x([l]X) - t: its roots are the x(X) with x([l]X) = t. Degree l^2.
template <class F>
Polynomial<F> preimage_poly(const WeierstrassCurve<F>& E, long l, const F& target_x) {
  auto [num, den] = multiplication_x_map(E, l);
  return num - target_x * den;
}

/// Base change of a curve along a coefficient map.
template <class G, class F, class Map>
WeierstrassCurve<G> base_change(const WeierstrassCurve<F>& E, typename Domain<G>::Context ctx, Map&& map) {
  std::array<G, 5> a{map(E.a1()), map(E.a2()), map(E.a3()), map(E.a4()), map(E.a6())};
  return WeierstrassCurve<G>(std::move(ctx), std::move(a));
}

}  // namespace cubtors
