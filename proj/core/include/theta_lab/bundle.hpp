#pragma once

#include "theta_lab/rational.hpp"

namespace theta_lab {

/// Rank/degree of a vector bundle on a curve of genus `genus`. Carries only numerical
/// invariants: Euler characteristic and slope, never h^0 or h^1 separately.
struct BundleSymbol {
  long rank = 1;
  long degree = 0;
  long genus = 2;

  BundleSymbol() = default;
  BundleSymbol(long rank, long degree, long genus = 2);

  friend bool operator==(const BundleSymbol&, const BundleSymbol&) = default;
};

/// Riemann-Roch: degree + rank (1 - genus).
long chi(const BundleSymbol& b);
Rational slope(const BundleSymbol& b);

BundleSymbol tensor(const BundleSymbol& a, const BundleSymbol& b);
BundleSymbol hom(const BundleSymbol& source, const BundleSymbol& target);
BundleSymbol dual(const BundleSymbol& b);
BundleSymbol det(const BundleSymbol& b);
BundleSymbol sym2(const BundleSymbol& b);
BundleSymbol wedge2(const BundleSymbol& b);
/// Tensor with a line bundle of degree `line_degree`.
BundleSymbol twist(const BundleSymbol& b, long line_degree);

/// True iff slope(sub) < slope(ambient); `sub` must have strictly smaller rank.
bool stability_allows(const BundleSymbol& sub, const BundleSymbol& ambient);

/// Dimension n(2n+1)(g-1) of the moduli space of rank-2n symplectic bundles.
long moduli_dim(long n, long g);

/// Top self-intersection (k Theta)^g = k^g g! of a multiple of the principal polarization.
long theta_self_intersection(long k, long g);

struct RaynaudInvariants {
  long mukai_rank;
  long duplication_degree;
  long theta_self_int_2theta;
  long pullback_degree_on_y;
  Rational slope_ec;
};

/// Numerical chain for the rank-4 Fourier-Mukai bundle on a genus-2 Jacobian.
/// Only g = 2 is accepted (UnsupportedGenus otherwise).
RaynaudInvariants raynaud_invariants(long g = 2);

}  // namespace theta_lab
