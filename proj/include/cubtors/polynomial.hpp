#pragma once

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cubtors/errors.hpp"
#include "cubtors/rational.hpp"

namespace cubtors {

/// Coefficient-domain traits. Each coefficient type T supplies a Context
/// (the ambient field it lives in) and the constructors the generic code needs.
template <class T>
struct Domain;

struct RationalsTag {
  friend bool operator==(RationalsTag, RationalsTag) { return true; }
};

template <>
struct Domain<Rational> {
  using Context = RationalsTag;
  static constexpr bool is_field = true;
  static Context context_of(const Rational&) { return {}; }
  static Rational zero(const Context&) { return Rational(0); }
  static Rational one(const Context&) { return Rational(1); }
  static Rational from_int(const Context&, long n) { return Rational(n); }
  static Rational from_rational(const Context&, const Rational& r) { return r; }
  static bool is_zero(const Rational& a) { return a.is_zero(); }
  static Rational div(const Rational& a, const Rational& b) { return a / b; }
  static std::string to_string(const Rational& a) { return a.to_string(); }
};

/// Dense univariate polynomial, coefficients stored low degree first. The
/// zero polynomial has no coefficients; otherwise the leading one is nonzero.
template <class T>
class Polynomial {
 public:
  using D = Domain<T>;
  using Context = typename D::Context;

  Polynomial() = default;
  explicit Polynomial(Context ctx) : ctx_(std::move(ctx)) {}
  Polynomial(Context ctx, std::vector<T> coeffs) : ctx_(std::move(ctx)), c_(std::move(coeffs)) { trim(); }

  static Polynomial constant(Context ctx, T c) { return Polynomial(std::move(ctx), {std::move(c)}); }
  static Polynomial monomial(Context ctx, T c, std::size_t degree) {
    std::vector<T> v(degree + 1, D::zero(ctx));
    v[degree] = std::move(c);
    return Polynomial(std::move(ctx), std::move(v));
  }
  static Polynomial x(Context ctx) { return monomial(ctx, D::one(ctx), 1); }
  static Polynomial from_ints(Context ctx, const std::vector<long>& ints) {
    std::vector<T> v;
    for (long n : ints) v.push_back(D::from_int(ctx, n));
    return Polynomial(std::move(ctx), std::move(v));
  }

  const Context& context() const { return ctx_; }
  const std::vector<T>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : D::zero(ctx_); }
  const T& leading() const { return c_.back(); }

  T eval(const T& x) const {
    T acc = D::zero(ctx_);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// Evaluation at an element of a larger ring S, given a coefficient embedding.
  template <class S, class Embed>
  S eval_in(const S& x, S zero, Embed&& embed) const {
    S acc = std::move(zero);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + embed(*it);
    return acc;
  }

  Polynomial derivative() const {
    std::vector<T> v;
    for (std::size_t i = 1; i < c_.size(); ++i) v.push_back(D::from_int(ctx_, static_cast<long>(i)) * c_[i]);
    return Polynomial(ctx_, std::move(v));
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    T lc = leading();
    std::vector<T> v;
    v.reserve(c_.size());
    for (const auto& a : c_) v.push_back(D::div(a, lc));
    return Polynomial(ctx_, std::move(v));
  }

  template <class F>
  auto map(F&& f) const {
    using U = std::decay_t<decltype(f(std::declval<const T&>()))>;
    std::vector<U> v;
    v.reserve(c_.size());
    for (const auto& a : c_) v.push_back(f(a));
    return v;
  }

  Polynomial operator-() const {
    std::vector<T> v;
    for (const auto& a : c_) v.push_back(-a);
    return Polynomial(ctx_, std::move(v));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<T> v(std::max(a.c_.size(), b.c_.size()), D::zero(a.pick_ctx(b)));
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] = v[i] + b.c_[i];
    return Polynomial(a.pick_ctx(b), std::move(v));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial(a.pick_ctx(b));
    std::vector<T> v(a.c_.size() + b.c_.size() - 1, D::zero(a.pick_ctx(b)));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (D::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
    }
    return Polynomial(a.pick_ctx(b), std::move(v));
  }
  friend Polynomial operator*(const T& s, const Polynomial& p) {
    std::vector<T> v;
    for (const auto& a : p.c_) v.push_back(s * a);
    return Polynomial(p.ctx_, std::move(v));
  }
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  std::string to_string(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = degree(); i >= 0; --i) {
      const T& a = c_[static_cast<std::size_t>(i)];
      if (D::is_zero(a)) continue;
      if (!first) os << " + ";
      first = false;
      os << "(" << D::to_string(a) << ")";
      if (i >= 1) os << "*" << var;
      if (i >= 2) os << "^" << i;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && D::is_zero(c_.back())) c_.pop_back();
  }
  const Context& pick_ctx(const Polynomial& o) const {
    if constexpr (requires(const Context& c) { static_cast<bool>(c); }) {
      if (!static_cast<bool>(ctx_)) return o.ctx_;
    }
    return ctx_;
  }

  Context ctx_{};
  std::vector<T> c_;
};

template <class T>
struct DivRem {
  Polynomial<T> quotient;
  Polynomial<T> remainder;
};

/// Euclidean division g = q*h + r, deg r < deg h. Over a non-field coefficient
/// domain every leading-coefficient division must be exact (InexactDivision).
template <class T>
DivRem<T> poly_divrem(const Polynomial<T>& g, const Polynomial<T>& h) {
  using D = Domain<T>;
  if (h.is_zero()) throw DivisionByZero("polynomial division by zero");
  const auto& ctx = h.context();
  std::vector<T> r = g.coeffs();
  long dh = h.degree();
  long dg = g.degree();
  if (dg < dh) return {Polynomial<T>(ctx), g};
  std::vector<T> q(static_cast<std::size_t>(dg - dh + 1), D::zero(ctx));
  const T& lc = h.leading();
  for (long i = dg; i >= dh; --i) {
    const T& top = r[static_cast<std::size_t>(i)];
    if (D::is_zero(top)) continue;
    T f = D::div(top, lc);
    for (long j = 0; j <= dh; ++j) {
      auto k = static_cast<std::size_t>(i - dh + j);
      r[k] = r[k] - f * h.coeffs()[static_cast<std::size_t>(j)];
    }
    q[static_cast<std::size_t>(i - dh)] = std::move(f);
  }
  r.erase(r.begin() + dh, r.end());
  return {Polynomial<T>(ctx, std::move(q)), Polynomial<T>(ctx, std::move(r))};
}

/// Monic gcd by the Euclidean algorithm. gcd(0, 0) is rejected.
template <class T>
Polynomial<T> poly_gcd(Polynomial<T> a, Polynomial<T> b) {
  static_assert(Domain<T>::is_field, "poly_gcd needs a field of coefficients");
  if (a.is_zero() && b.is_zero()) throw DivisionByZero("gcd(0, 0)");
  while (!b.is_zero()) {
    auto r = poly_divrem(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

template <class T>
bool is_squarefree(const Polynomial<T>& h) {
  return poly_gcd(h, h.derivative()).degree() == 0;
}

/// h / gcd(h, h').
template <class T>
Polynomial<T> squarefree_part(const Polynomial<T>& h) {
  auto g = poly_gcd(h, h.derivative());
  return poly_divrem(h, g).quotient;
}

template <class T>
Polynomial<T> poly_pow(const Polynomial<T>& p, unsigned e) {
  Polynomial<T> r = Polynomial<T>::constant(p.context(), Domain<T>::one(p.context()));
  Polynomial<T> b = p;
  while (e) {
    if (e & 1u) r = r * b;
    e >>= 1u;
    if (e) b = b * b;
  }
  return r;
}

using QPoly = Polynomial<Rational>;

/// Parses "c0,c1,...,cn" (low degree first) into a rational polynomial.
QPoly parse_qpoly(const std::string& csv);

/// Resultant over the rationals via the Euclidean remainder sequence.
Rational resultant(const QPoly& f, const QPoly& g);

/// Multiplies by the lcm of denominators and divides by the content; the
/// result has integer coefficients, gcd 1, positive leading coefficient.
std::vector<Integer> primitive_integer_form(const QPoly& h);

/// The coefficient ring Q[t]: polynomials in a parameter t, used as the
/// coefficient domain of families of curves. Division must be exact.
template <>
struct Domain<QPoly> {
  using Context = RationalsTag;
  static constexpr bool is_field = false;
  static Context context_of(const QPoly&) { return {}; }
  static QPoly zero(const Context&) { return QPoly(); }
  static QPoly one(const Context&) { return QPoly::constant({}, Rational(1)); }
  static QPoly from_int(const Context&, long n) { return QPoly::constant({}, Rational(n)); }
  static QPoly from_rational(const Context&, const Rational& r) { return QPoly::constant({}, r); }
  static bool is_zero(const QPoly& a) { return a.is_zero(); }
  static QPoly div(const QPoly& a, const QPoly& b) {
    auto [q, r] = poly_divrem(a, b);
    if (!r.is_zero()) throw InexactDivision("t-polynomial division leaves remainder " + r.to_string("t"));
    return q;
  }
  static std::string to_string(const QPoly& a) { return a.to_string("t"); }
};

}  // namespace cubtors
