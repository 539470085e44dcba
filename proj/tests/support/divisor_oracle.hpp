#pragma once

// Brute-force divisor-class oracle for genus-2 curves y^2 = f(x) over small F_q.
//
// Divisors are multisets of finite points over F_{q^2}; every rational effective
// divisor of degree <= 2 is such a Galois-stable multiset. E - deg(E)[inf] is
// principal iff E is the zero divisor of a function with poles only at infinity:
//   - a(x):         E is a union of x-fibres (P + iP, or 2W at a Weierstrass point)
//   - a(x) - y:     deg E = 5 (deg a <= 2) or 6 (deg a = 3), with a^2 - f = c * U_E and
//                   a(x_P) = y_P on the support, where U_E is the x-coordinate polynomial.
// Candidates a(x) are searched exhaustively. Nothing here uses Cantor's algorithm.

#include <cstdint>
#include <vector>

#include "theta_lab/hyperelliptic.hpp"

namespace theta_lab::oracle {

/// a + b t in F_q[t] / (t^2 - nonresidue).
struct Fq2 {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  friend bool operator==(const Fq2&, const Fq2&) = default;
  friend auto operator<=>(const Fq2&, const Fq2&) = default;
};

struct OraclePoint {
  Fq2 x;
  Fq2 y;
  friend bool operator==(const OraclePoint&, const OraclePoint&) = default;
  friend auto operator<=>(const OraclePoint&, const OraclePoint&) = default;
};

/// Sorted multiset of finite points.
using OracleDivisor = std::vector<OraclePoint>;

class DivisorOracle {
 public:
  /// f given as its six coefficients mod q (f_0 .. f_5, f_5 = 1).
  DivisorOracle(std::uint64_t q, std::vector<std::uint64_t> f);
  explicit DivisorOracle(const HyperellipticCurve<Fp>& curve);

  std::uint64_t q() const { return q_; }

  /// Affine points over F_{q^2}; rational ones have zero t-parts.
  const std::vector<OraclePoint>& points_q2() const { return points_q2_; }
  std::size_t rational_point_count() const;  // including infinity
  std::size_t q2_point_count() const { return points_q2_.size() + 1; }

  /// Every Galois-stable effective finite divisor of degree <= 2.
  std::vector<OracleDivisor> small_rational_divisors() const;

  /// Whether E - deg(E)[inf] is principal; deg E must be <= 6.
  bool is_principal(OracleDivisor e) const;

  /// The finite points of a Mumford pair, via roots of u in F_{q^2} and y = v(x).
  OracleDivisor from_mumford(const MumfordDivisor<Fp>& d) const;

  OraclePoint involution(const OraclePoint& p) const;
  OracleDivisor involution(const OracleDivisor& d) const;

  /// D1 - deg(D1)[inf] ~ D2 - deg(D2)[inf]
  bool equivalent(const OracleDivisor& d1, const OracleDivisor& d2) const;
  /// (A) + (B) ~ (C), all normalized by [inf].
  bool sum_is(const OracleDivisor& a, const OracleDivisor& b, const OracleDivisor& c) const;

  /// Number of classes in Pic^0(F_q), by union-find over small_rational_divisors().
  std::size_t class_count() const;

  // F_{q^2} arithmetic.
  Fq2 add(Fq2 u, Fq2 v) const;
  Fq2 sub(Fq2 u, Fq2 v) const;
  Fq2 mul(Fq2 u, Fq2 v) const;
  Fq2 neg(Fq2 u) const;
  Fq2 frobenius(Fq2 u) const;
  Fq2 eval_f(Fq2 x) const;

 private:
  bool is_union_of_fibres(const OracleDivisor& e) const;
  bool is_norm_divisor(const OracleDivisor& e) const;

  std::uint64_t q_;
  std::uint64_t nonresidue_;
  std::vector<std::uint64_t> f_;
  std::vector<OraclePoint> points_q2_;
};

}  // namespace theta_lab::oracle
