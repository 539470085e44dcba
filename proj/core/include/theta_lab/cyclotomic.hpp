#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "theta_lab/polynomial.hpp"
#include "theta_lab/rational.hpp"

namespace theta_lab {

using RationalPolynomial = Polynomial<Rational>;

/// The N-th cyclotomic polynomial over the rationals.
const RationalPolynomial& cyclotomic_polynomial(unsigned modulus);

/// Euler's totient.
unsigned euler_phi(unsigned n);

/// Element of Q(zeta_N) in the power basis 1, zeta, ..., zeta^(phi(N)-1), reduced
/// modulo the N-th cyclotomic polynomial. Equal elements of the same field have equal
/// coefficient vectors; mixed-modulus operands are lifted to the field of modulus lcm.
class CyclotomicElement {
 public:
  /// The rational constant `value` inside Q(zeta_N).
  explicit CyclotomicElement(const Rational& value = Rational(0), unsigned modulus = 1);

  /// zeta_N^exponent; negative exponents are taken mod N.
  static CyclotomicElement zeta_power(unsigned modulus, std::int64_t exponent);

  unsigned modulus() const { return modulus_; }
  /// Always of length phi(modulus).
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  bool is_zero() const;
  /// True iff every coefficient past the constant term vanishes.
  bool is_rational() const;

  /// The same element viewed in Q(zeta_M); M must be a multiple of the current modulus.
  CyclotomicElement embed(unsigned target_modulus) const;

  CyclotomicElement inverse() const;

  CyclotomicElement& operator+=(const CyclotomicElement& rhs);
  CyclotomicElement& operator-=(const CyclotomicElement& rhs);
  CyclotomicElement& operator*=(const CyclotomicElement& rhs);
  CyclotomicElement& operator/=(const CyclotomicElement& rhs);

  friend CyclotomicElement operator+(CyclotomicElement a, const CyclotomicElement& b) { return a += b; }
  friend CyclotomicElement operator-(CyclotomicElement a, const CyclotomicElement& b) { return a -= b; }
  friend CyclotomicElement operator*(CyclotomicElement a, const CyclotomicElement& b) { return a *= b; }
  friend CyclotomicElement operator/(CyclotomicElement a, const CyclotomicElement& b) { return a /= b; }
  CyclotomicElement operator-() const;

  /// Compares in the common field of modulus lcm.
  friend bool operator==(const CyclotomicElement& a, const CyclotomicElement& b);

  /// "[N](c0, c1, ...)" with exact rational coefficients.
  std::string to_string() const;

 private:
  CyclotomicElement(unsigned modulus, const RationalPolynomial& residue);
  RationalPolynomial as_polynomial() const;

  unsigned modulus_ = 1;
  std::vector<Rational> coeffs_;
};

enum class CycloOp { kAdd, kSub, kMul, kDiv };

CyclotomicElement cyclo_arith(const CyclotomicElement& a, const CyclotomicElement& b, CycloOp op);

/// sin(k*pi/m) as an element of Q(zeta_N), N = lcm(2m, 4), via (zeta^k - zeta^-k) / (2i)
/// with zeta a primitive 2m-th root of unity.
CyclotomicElement cyclo_sin(std::int64_t k, std::int64_t m);

/// The rational value of `a`; throws NotRational when an irrational coefficient survives.
Rational cyclo_to_rational(const CyclotomicElement& a);

}  // namespace theta_lab
