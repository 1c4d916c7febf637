#include "cubtors/cubic_field.hpp"

#include <sstream>

#include "cubtors/errors.hpp"
#include "cubtors/numkernel.hpp"

namespace cubtors {

std::string to_string(GaloisType g) { return g == GaloisType::C3 ? "C3" : "S3"; }

Integer cubic_disc(const Integer& c0, const Integer& c1, const Integer& c2) {
  Integer d = 18 * c2 * c1 * c0 - 4 * c2 * c2 * c2 * c0 + c2 * c2 * c1 * c1 - 4 * c1 * c1 * c1 - 27 * c0 * c0;
  QPoly f({}, {Rational(c0), Rational(c1), Rational(c2), Rational(1)});
  Rational res = resultant(f, f.derivative());
  if (Rational(d) != -res) throw std::logic_error("cubic discriminant disagrees with -Res(f, f')");
  return d;
}

bool has_rational_root(const Integer& c0, const Integer& c1, const Integer& c2) {
  auto f = [&](const Integer& x) -> Integer { return ((x + c2) * x + c1) * x + c0; };
  if (c0 == 0) return true;
  Integer a = abs(c0);
  // Integer roots divide c0; trial-divide up to sqrt(|c0|) and test both cofactors.
  for (Integer d = 1; d * d <= a; ++d) {
    if (a % d != 0) continue;
    for (const Integer& e : {d, Integer(a / d)})
      if (f(e) == 0 || f(-e) == 0) return true;
  }
  return false;
}

GaloisType galois_group(const Integer& c0, const Integer& c1, const Integer& c2) {
  if (has_rational_root(c0, c1, c2)) throw Reducible("cubic has a rational root");
  return is_perfect_square(cubic_disc(c0, c1, c2)) ? GaloisType::C3 : GaloisType::S3;
}

CubicField::CubicField(Token, std::array<Integer, 3> c, Integer poly_disc, Integer field_disc, std::string label)
    : c_(std::move(c)), poly_disc_(std::move(poly_disc)), field_disc_(std::move(field_disc)), label_(std::move(label)) {
  galois_ = is_perfect_square(poly_disc_) ? GaloisType::C3 : GaloisType::S3;
}

std::shared_ptr<const CubicField> CubicField::make(const std::array<Integer, 3>& c, std::optional<Integer> field_disc,
                                                   std::string label) {
  if (has_rational_root(c[0], c[1], c[2])) throw Reducible(label + ": defining cubic has a rational root");
  Integer pd = cubic_disc(c[0], c[1], c[2]);
  Integer fd = field_disc.value_or(pd);
  if (fd == 0 || pd % fd != 0 || !is_perfect_square(Integer(pd / fd)))
    throw DiscMismatch(label + ": poly disc " + pd.get_str() + " is not a square multiple of field disc " + fd.get_str());
  return std::make_shared<const CubicField>(Token{}, c, pd, fd, std::move(label));
}

QPoly CubicField::defining_poly() const {
  return QPoly({}, {Rational(c_[0]), Rational(c_[1]), Rational(c_[2]), Rational(1)});
}

FieldElement CubicField::element(Rational c0, Rational c1, Rational c2) const {
  return FieldElement(shared_from_this(), {std::move(c0), std::move(c1), std::move(c2)});
}

FieldElement CubicField::alpha() const { return element(0, 1, 0); }

namespace {
void check_same(const FieldElement& a, const FieldElement& b) {
  if (!a.field()->same_as(*b.field())) throw FieldMismatch(a.field()->label() + " vs " + b.field()->label());
}
}  // namespace

Integer FieldElement::denominator() const {
  Integer l = 1;
  for (const auto& c : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
  return l;
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  check_same(a, b);
  return {a.field_, {a.c_[0] + b.c_[0], a.c_[1] + b.c_[1], a.c_[2] + b.c_[2]}};
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  check_same(a, b);
  return {a.field_, {a.c_[0] - b.c_[0], a.c_[1] - b.c_[1], a.c_[2] - b.c_[2]}};
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  check_same(a, b);
  const auto& x = a.c_;
  const auto& y = b.c_;
  Rational d0 = x[0] * y[0];
  Rational d1 = x[0] * y[1] + x[1] * y[0];
  Rational d2 = x[0] * y[2] + x[1] * y[1] + x[2] * y[0];
  Rational d3 = x[1] * y[2] + x[2] * y[1];
  Rational d4 = x[2] * y[2];
  const auto& c = a.field_->coeffs();
  Rational c0(c[0]), c1(c[1]), c2(c[2]);
  // a^3 = -c0 - c1 a - c2 a^2,  a^4 = c2 c0 + (c2 c1 - c0) a + (c2^2 - c1) a^2
  return {a.field_,
          {d0 - c0 * d3 + c2 * c0 * d4, d1 - c1 * d3 + (c2 * c1 - c0) * d4, d2 - c2 * d3 + (c2 * c2 - c1) * d4}};
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  return a.field_->same_as(*b.field_) && a.c_ == b.c_;
}

std::array<std::array<Rational, 3>, 3> FieldElement::mul_matrix() const {
  std::array<std::array<Rational, 3>, 3> m;
  FieldElement basis = field_->element(1);
  for (std::size_t j = 0; j < 3; ++j) {
    FieldElement col = *this * basis;
    for (std::size_t i = 0; i < 3; ++i) m[i][j] = col.c_[i];
    basis = basis * field_->alpha();
  }
  return m;
}

namespace {
Rational det3(const std::array<std::array<Rational, 3>, 3>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}
}  // namespace

Rational FieldElement::norm() const { return det3(mul_matrix()); }

Rational FieldElement::trace() const {
  auto m = mul_matrix();
  return m[0][0] + m[1][1] + m[2][2];
}

FieldElement FieldElement::inv() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in " + field_->label());
  // Solve M v = e0 by Cramer's rule; v are the coordinates of the inverse.
  auto m = mul_matrix();
  Rational det = det3(m);
  std::array<Rational, 3> v;
  for (std::size_t k = 0; k < 3; ++k) {
    auto mk = m;
    for (std::size_t i = 0; i < 3; ++i) mk[i][k] = i == 0 ? Rational(1) : Rational(0);
    v[k] = det3(mk) / det;
  }
  return {field_, v};
}

std::string FieldElement::to_string(const std::string& var) const {
  std::ostringstream os;
  bool first = true;
  auto term = [&](const Rational& c, const std::string& mono) {
    if (c.is_zero()) return;
    Rational a = c;
    if (!first) {
      os << (a.sign() < 0 ? " - " : " + ");
      a = a.abs();
    } else if (a.sign() < 0 && !mono.empty()) {
      os << "-";
      a = a.abs();
    }
    first = false;
    if (mono.empty())
      os << a;
    else if (a.is_one())
      os << mono;
    else
      os << a << "*" << mono;
  };
  term(c_[2], var + "^2");
  term(c_[1], var);
  term(c_[0], "");
  if (first) os << "0";
  return os.str();
}

Embeddings::Embeddings(const CubicField& k, long precision_bits)
    : precision_(precision_bits), totally_real_(k.totally_real()) {
  auto r = complex_roots(k.defining_poly(), precision_bits);
  if (totally_real_) {
    for (auto& z : r) z = BigComplex(z.re(), BigFloat(precision_bits));
    roots_ = r;
    return;
  }
  // One real root, then the conjugate pair with positive imaginary part first.
  std::size_t real_idx = 0;
  for (std::size_t i = 0; i < 3; ++i)
    if (r[i].im().abs() < r[real_idx].im().abs()) real_idx = i;
  roots_.push_back(BigComplex(r[real_idx].re(), BigFloat(precision_bits)));
  for (std::size_t i = 0; i < 3; ++i)
    if (i != real_idx && r[i].im().sign() > 0) roots_.push_back(r[i]);
  roots_.push_back(roots_[1].conj());
}

BigComplex Embeddings::apply(const FieldElement& a, std::size_t i) const {
  const BigComplex& r = roots_.at(i);
  const auto& c = a.coords();
  return BigComplex(c[0], precision_) + BigComplex(c[1], precision_) * r + BigComplex(c[2], precision_) * (r * r);
}

KPoly to_field(const QPoly& h, const FieldRef& k) {
  return KPoly(k, h.map([&](const Rational& c) { return k->element(c); }));
}

std::vector<BigComplex> embed(const FieldElement& a, long precision_bits) {
  Embeddings e(*a.field(), precision_bits);
  return {e.apply(a, 0), e.apply(a, 1), e.apply(a, 2)};
}

bool embedding1_less(const FieldElement& a, const FieldElement& b) {
  if (a == b) return false;
  Embeddings e(*a.field(), 128);
  BigFloat d = e.apply(a, 0).re() - e.apply(b, 0).re();
  BigFloat scale = e.apply(a, 0).abs() + e.apply(b, 0).abs() + BigFloat(1, 128);
  if (pow2(-100, 128) * scale < d.abs()) return d.sign() < 0;
  return a.coords() < b.coords();
}

}  // namespace cubtors
