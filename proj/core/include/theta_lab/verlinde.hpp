#pragma once

#include <vector>

#include "theta_lab/cyclotomic.hpp"
#include "theta_lab/rational.hpp"

namespace theta_lab {

/// Index (s, t) of a level-2 weight for Sp(4): s, t >= 1 and s + t <= 4.
class VerlindePair {
 public:
  VerlindePair(int s, int t);

  int s() const { return s_; }
  int t() const { return t_; }

  friend bool operator==(const VerlindePair&, const VerlindePair&) = default;

 private:
  int s_;
  int t_;
};

/// The six admissible pairs in lexicographic order.
std::vector<VerlindePair> admissible_pairs();

/// 2^4 sin(pi(s+t)/5) sin(pi t/5) sin(pi s/10) sin(pi(s+2t)/10), exactly.
///
/// The four sines are the Weyl-denominator factors of C2 at the shifted weight
/// (a, b) = (s + t, t) over the denominator k + h = 5: sin(pi a/5), sin(pi b/5),
/// sin(pi(a - b)/10), sin(pi(a + b)/10).
CyclotomicElement s_factor(const VerlindePair& pair);

/// 2^2 * 5^2 * sum over admissible pairs of s_factor^-2, computed in the cyclotomic
/// field and only then converted. Throws NotRational / NotInteger on an arithmetic bug.
BigInt verlinde_p2();

struct HilbertValues {
  BigInt p0;
  BigInt p1;
  BigInt p2;
};

/// (p(0), p(1), p(2)) for the determinant bundle on the moduli of Sp(4)-bundles at
/// genus 2. p(0) = 1 and p(1) = 10 are fixed constants; p(2) is computed.
HilbertValues hilbert_values();

inline constexpr long kVerlindeP0 = 1;
inline constexpr long kVerlindeP1 = 10;

struct EigenDims {
  BigInt plus;
  BigInt minus;

  friend bool operator==(const EigenDims&, const EigenDims&) = default;
};

/// (2n^g + 2^(g-1), 2n^g - 2^(g-1)): dimensions of the even/odd parts of H^0(J^(g-1), 2n Theta).
EigenDims theta_eigendims(long n, long g);

}  // namespace theta_lab
