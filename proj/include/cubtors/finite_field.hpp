#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "cubtors/kernels.hpp"
#include "cubtors/polynomial.hpp"

namespace cubtors {

/// Dense polynomials over a prime field F_p (p < 2^32), coefficients low
/// degree first, reduced and trimmed. The workhorse behind distinct-degree
/// factorization and prime splitting.
namespace zp {

using Poly = std::vector<std::uint64_t>;

void trim(Poly& a);
long degree(const Poly& a);
Poly add(const Poly& a, const Poly& b, std::uint64_t p);
Poly sub(const Poly& a, const Poly& b, std::uint64_t p);
Poly mul(const Poly& a, const Poly& b, std::uint64_t p);
std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b, std::uint64_t p);
Poly mod(const Poly& a, const Poly& b, std::uint64_t p);
Poly gcd(Poly a, Poly b, std::uint64_t p);
Poly monic(const Poly& a, std::uint64_t p);
Poly derivative(const Poly& a, std::uint64_t p);
Poly powmod(const Poly& base, std::uint64_t e, const Poly& m, std::uint64_t p);
std::uint64_t eval(const Poly& a, std::uint64_t x, std::uint64_t p);
bool is_squarefree(const Poly& a, std::uint64_t p);
/// Roots in F_p (distinct), ascending; brute force for small p, otherwise
/// equal-degree splitting of gcd(a, x^p - x).
std::vector<std::uint64_t> roots(const Poly& a, std::uint64_t p);

/// Distinct-degree factorization of a monic squarefree polynomial: pairs
/// (d, product of all irreducible factors of degree d).
std::vector<std::pair<int, Poly>> ddf(const Poly& f, std::uint64_t p);

/// Reduction of a rational polynomial mod p. Throws NonIntegral if p divides a
/// denominator.
Poly from_rational(const QPoly& h, std::uint64_t p);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t invmod(std::uint64_t a, std::uint64_t p);
bool is_prime(std::uint64_t n);
std::uint64_t next_prime(std::uint64_t n);

}  // namespace zp

class FFElement;

/// F_q with q = p^k, k <= 3, realised as F_p[x]/(g) for a monic irreducible g.
class FiniteField : public std::enable_shared_from_this<FiniteField> {
 public:
  /// g given low degree first, monic, degree 1..3 (degree 1 means F_p).
  /// Throws ReducibleModulus if g has a root in F_p.
  static std::shared_ptr<const FiniteField> make(std::uint64_t p, const zp::Poly& g);
  static std::shared_ptr<const FiniteField> prime_field(std::uint64_t p);
  /// F_{p^k} with the first monic irreducible modulus in lexicographic order.
  static std::shared_ptr<const FiniteField> extension(std::uint64_t p, int k);

  std::uint64_t p() const { return packed_.p; }
  int degree() const { return packed_.k; }
  std::uint64_t size() const { return packed_.q; }
  const zp::Poly& modulus() const { return modulus_; }
  const kernels::PackedField& packed() const { return packed_; }

  FFElement element(std::uint32_t index) const;
  FFElement from_int(long n) const;
  /// Image of the residue class of x (the generator) in this field.
  FFElement generator() const;
  /// Embeds an element of a subfield given by a prime field value.
  FFElement from_prime(std::uint64_t v) const;

  bool same_as(const FiniteField& o) const { return this == &o || (p() == o.p() && modulus_ == o.modulus_); }

  struct Token {};
  FiniteField(Token, kernels::PackedField packed, zp::Poly modulus);

 private:
  kernels::PackedField packed_;
  zp::Poly modulus_;
};

using FFRef = std::shared_ptr<const FiniteField>;

class FFElement {
 public:
  FFElement(const FiniteField* f, std::uint32_t v) : f_(f), v_(v) {}

  const FiniteField* field() const { return f_; }
  std::uint32_t index() const { return v_; }
  bool is_zero() const { return v_ == 0; }
  /// Coordinates in the basis 1, x, x^2 of F_p[x]/(g).
  std::array<std::uint64_t, 3> coords() const;

  FFElement operator-() const;
  friend FFElement operator+(const FFElement& a, const FFElement& b);
  friend FFElement operator-(const FFElement& a, const FFElement& b);
  friend FFElement operator*(const FFElement& a, const FFElement& b);
  friend FFElement operator/(const FFElement& a, const FFElement& b) { return a * b.inv(); }
  friend bool operator==(const FFElement& a, const FFElement& b) { return a.v_ == b.v_ && a.f_->same_as(*b.f_); }

  FFElement pow(std::uint64_t e) const;
  FFElement inv() const;
  /// Quadratic character: 0 for zero, 1 for nonzero squares, -1 otherwise (odd p).
  int legendre() const;
  std::string to_string() const;

 private:
  const FiniteField* f_;
  std::uint32_t v_;
};

template <>
struct Domain<FFElement> {
  using Context = FFRef;
  static constexpr bool is_field = true;
  static Context context_of(const FFElement& a) { return a.field()->shared_from_this(); }
  static FFElement zero(const Context& f) { return f->element(0); }
  static FFElement one(const Context& f) { return f->from_int(1); }
  static FFElement from_int(const Context& f, long n) { return f->from_int(n); }
  static bool is_zero(const FFElement& a) { return a.is_zero(); }
  static FFElement div(const FFElement& a, const FFElement& b) { return a / b; }
  static std::string to_string(const FFElement& a) { return a.to_string(); }
};

using FFPoly = Polynomial<FFElement>;

/// Residue field F_p[x]/(g); pre: g monic irreducible of degree <= 3.
FFRef make_residue_field(std::uint64_t p, const zp::Poly& g);

inline constexpr std::uint64_t kEnumerationCap = 1000000;

/// Every element of the field exactly once. Throws TooLarge beyond 10^6.
std::vector<FFElement> enumerate(const FFRef& f);

/// Number of y in the field with y^2 + a y = b.
int ff_quadratic_count(const FFElement& a, const FFElement& b);

/// Distinct-degree factorization of a monic squarefree polynomial over a prime
/// field. Throws NotSquarefree.
std::vector<std::pair<int, FFPoly>> ff_ddf(const FFPoly& h);

/// Distinct roots of h in its coefficient field, by enumeration (q <= 10^6).
std::vector<FFElement> ff_roots(const FFPoly& h);

}  // namespace cubtors
