#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cubtors/bigfloat.hpp"
#include "cubtors/polynomial.hpp"
#include "cubtors/rational.hpp"

namespace cubtors {

enum class GaloisType { C3, S3 };
std::string to_string(GaloisType g);

/// Discriminant of the monic cubic x^3 + c2 x^2 + c1 x + c0, computed from the
/// closed formula and cross-checked against -Res(f, f').
Integer cubic_disc(const Integer& c0, const Integer& c1, const Integer& c2);

/// C3 iff the discriminant is a perfect square. Throws Reducible if the cubic
/// has a rational root.
GaloisType galois_group(const Integer& c0, const Integer& c1, const Integer& c2);

/// True if the monic integer cubic has an integer (equivalently rational) root.
bool has_rational_root(const Integer& c0, const Integer& c1, const Integer& c2);

class FieldElement;

/// Q[x]/(f) for a monic irreducible integer cubic f = x^3 + c2 x^2 + c1 x + c0.
class CubicField : public std::enable_shared_from_this<CubicField> {
 public:
  /// Validates irreducibility and that poly_disc / field_disc is a positive
  /// perfect square. field_disc defaults to poly_disc when unknown.
  static std::shared_ptr<const CubicField> make(const std::array<Integer, 3>& c, std::optional<Integer> field_disc,
                                                std::string label);

  const std::array<Integer, 3>& coeffs() const { return c_; }
  const Integer& poly_disc() const { return poly_disc_; }
  const Integer& field_disc() const { return field_disc_; }
  const std::string& label() const { return label_; }
  GaloisType galois() const { return galois_; }
  bool totally_real() const { return poly_disc_ > 0; }
  QPoly defining_poly() const;

  bool same_as(const CubicField& o) const { return this == &o || c_ == o.c_; }

  FieldElement element(Rational c0, Rational c1 = 0, Rational c2 = 0) const;
  FieldElement alpha() const;

  struct Token {};
  CubicField(Token, std::array<Integer, 3> c, Integer poly_disc, Integer field_disc, std::string label);

 private:
  std::array<Integer, 3> c_;
  Integer poly_disc_;
  Integer field_disc_;
  std::string label_;
  GaloisType galois_;
};

using FieldRef = std::shared_ptr<const CubicField>;

/// Element c0 + c1 a + c2 a^2 of a cubic field, a a root of the defining cubic.
class FieldElement {
 public:
  FieldElement(FieldRef field, std::array<Rational, 3> coords) : field_(std::move(field)), c_(std::move(coords)) {}

  const FieldRef& field() const { return field_; }
  const std::array<Rational, 3>& coords() const { return c_; }
  bool is_zero() const { return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero(); }
  bool is_rational() const { return c_[1].is_zero() && c_[2].is_zero(); }
  /// Least common multiple of the coordinate denominators.
  Integer denominator() const;

  FieldElement operator-() const { return {field_, {-c_[0], -c_[1], -c_[2]}}; }
  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inv(); }
  friend bool operator==(const FieldElement& a, const FieldElement& b);

  /// Throws DivisionByZero for zero.
  FieldElement inv() const;
  Rational norm() const;
  Rational trace() const;

  std::string to_string(const std::string& var = "a") const;

 private:
  /// Matrix of multiplication by this element in the basis 1, a, a^2 (column j
  /// is the image of a^j).
  std::array<std::array<Rational, 3>, 3> mul_matrix() const;

  FieldRef field_;
  std::array<Rational, 3> c_;
};

inline std::ostream& operator<<(std::ostream& os, const FieldElement& e) { return os << e.to_string(); }

template <>
struct Domain<FieldElement> {
  using Context = FieldRef;
  static constexpr bool is_field = true;
  static Context context_of(const FieldElement& a) { return a.field(); }
  static FieldElement zero(const Context& k) { return k->element(0); }
  static FieldElement one(const Context& k) { return k->element(1); }
  static FieldElement from_int(const Context& k, long n) { return k->element(n); }
  static FieldElement from_rational(const Context& k, const Rational& r) { return k->element(r); }
  static bool is_zero(const FieldElement& a) { return a.is_zero(); }
  static FieldElement div(const FieldElement& a, const FieldElement& b) { return a / b; }
  static std::string to_string(const FieldElement& a) { return a.to_string(); }
};

using KPoly = Polynomial<FieldElement>;

/// Images of the generator under the three complex embeddings, canonically
/// ordered: real roots ascending, then the positive-imaginary member of the
/// conjugate pair followed by its conjugate.
class Embeddings {
 public:
  Embeddings(const CubicField& k, long precision_bits);
  const std::vector<BigComplex>& roots() const { return roots_; }
  long precision() const { return precision_; }
  bool totally_real() const { return totally_real_; }
  BigComplex apply(const FieldElement& a, std::size_t i) const;
  BigComplex apply(const Rational& a, std::size_t) const { return BigComplex(a, precision_); }

 private:
  std::vector<BigComplex> roots_;
  long precision_;
  bool totally_real_;
};

/// Base change of a rational polynomial into K.
KPoly to_field(const QPoly& h, const FieldRef& k);

/// The three embeddings of a, evaluated at the given precision.
std::vector<BigComplex> embed(const FieldElement& a, long precision_bits);

/// Deterministic order by the real image under the first embedding, falling
/// back to coordinates on (numerical) ties.
bool embedding1_less(const FieldElement& a, const FieldElement& b);

}  // namespace cubtors
