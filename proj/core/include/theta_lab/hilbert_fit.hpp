#pragma once

#include "theta_lab/polynomial.hpp"
#include "theta_lab/rational.hpp"

namespace theta_lab {

/// Hilbert polynomial of the form
///
///   p(n) = gamma (n+1)(n+2)(n+3)^2(n+4)(n+5) (M^2 - sigma M + pi),   M = (n+3)^2,
///
/// i.e. the product (n - a)(n + 6 + a)(n - b)(n + 6 + b) rewritten through
/// (n - a)(n + 6 + a) = M - (a+3)^2, with sigma = A + B, pi = A B, A = (a+3)^2, B = (b+3)^2.
/// The roots a, b themselves are never needed.
struct HilbertFit {
  Rational gamma;
  Rational sigma;
  Rational pi;
  /// 10! * gamma, the top self-intersection of the polarization.
  BigInt chern_degree;

  /// Fully expanded p, degree 10 in n.
  Polynomial<Rational> expanded() const;
};

/// Solves the linear system in (gamma, gamma*sigma, gamma*pi) from p(0), p(1), p(2).
/// Throws SingularSystem if gamma would vanish and NonIntegralChern if 10!*gamma is
/// not an integer.
HilbertFit fit_hilbert(const BigInt& p0, const BigInt& p1, const BigInt& p2);

Rational evaluate(const HilbertFit& fit, const Rational& n);

/// Centre c of the symmetry p(n) = p(2c - n), read off the two top coefficients.
Rational symmetry_center(const HilbertFit& fit);

/// Power of the polarization giving the canonical bundle: minus the Dynkin index of
/// the adjoint representation of type C2.
int canonical_power();

}  // namespace theta_lab
