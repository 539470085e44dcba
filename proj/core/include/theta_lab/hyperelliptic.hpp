#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "theta_lab/polynomial.hpp"
#include "theta_lab/prime_field.hpp"
#include "theta_lab/rational.hpp"

namespace theta_lab {

/// Base field of a curve: the rationals or F_p for an odd prime p.
struct BaseField {
  enum class Kind { kRationals, kPrime };

  Kind kind = Kind::kRationals;
  std::uint64_t characteristic = 0;

  static BaseField rationals() { return {Kind::kRationals, 0}; }
  static BaseField prime(std::uint64_t p) { return {Kind::kPrime, p}; }

  /// "Q" or "Fp:<p>"
  std::string to_string() const;

  friend bool operator==(const BaseField&, const BaseField&) = default;
};

template <class T>
struct CurvePoint {
  bool infinity = false;
  T x{};
  T y{};

  static CurvePoint at_infinity() { return {true, {}, {}}; }
  static CurvePoint affine(T x, T y) { return {false, std::move(x), std::move(y)}; }

  /// "(x, y)" or "inf"
  std::string to_string() const {
    if (infinity) return "inf";
    return "(" + FieldTraits<T>::to_string(x) + ", " + FieldTraits<T>::to_string(y) + ")";
  }

  friend bool operator==(const CurvePoint& a, const CurvePoint& b) {
    if (a.infinity || b.infinity) return a.infinity == b.infinity;
    return a.x == b.x && a.y == b.y;
  }
};

/// Reduced divisor D - deg(u) [inf] in Mumford form: u monic of degree <= 2,
/// deg v < deg u and u | v^2 - f.
template <class T>
struct MumfordDivisor {
  Polynomial<T> u;
  Polynomial<T> v;

  /// "u=<poly>; v=<poly>"
  std::string to_string() const { return "u=" + u.to_string() + "; v=" + v.to_string(); }

  friend bool operator==(const MumfordDivisor&, const MumfordDivisor&) = default;
};

/// Divisor class of degree `degree`, stored as base + degree * [inf] with base in Pic^0.
template <class T>
struct PicClass {
  MumfordDivisor<T> base;
  long degree = 0;

  /// "u=<poly>; v=<poly>; deg=<d>"
  std::string to_string() const { return base.to_string() + "; deg=" + std::to_string(degree); }

  friend bool operator==(const PicClass&, const PicClass&) = default;
};

/// Formal integer combination of points.
template <class T>
struct FormalDivisor {
  std::vector<std::pair<CurvePoint<T>, long>> terms;

  long degree() const {
    long d = 0;
    for (const auto& [point, mult] : terms) d += mult;
    return d;
  }
};

/// Genus-2 curve y^2 = f(x), f monic of degree 5 and squarefree, in odd or zero
/// characteristic. The single point at infinity is a Weierstrass point and the
/// canonical class is 2 [inf].
template <class T>
class HyperellipticCurve {
 public:
  /// Throws InvalidArgument (f not monic quintic), EvenCharacteristic, NotPrime or
  /// NotSquarefree.
  explicit HyperellipticCurve(Polynomial<T> f);

  const Polynomial<T>& f() const { return f_; }
  BaseField base_field() const;
  T zero() const { return zero_like(f_.leading()); }
  T one() const { return one_like(f_.leading()); }
  /// Field element from an integer.
  T scalar(long n) const { return FieldTraits<T>::from_int(f_.leading(), n); }

  bool contains(const CurvePoint<T>& p) const;
  bool is_valid(const MumfordDivisor<T>& d) const;
  /// Throws InvalidDivisor unless is_valid(d).
  void require_valid(const MumfordDivisor<T>& d) const;

  MumfordDivisor<T> identity() const;
  /// [p] - [inf]
  MumfordDivisor<T> point_divisor(const CurvePoint<T>& p) const;
  MumfordDivisor<T> cantor_add(const MumfordDivisor<T>& a, const MumfordDivisor<T>& b) const;
  MumfordDivisor<T> negate(const MumfordDivisor<T>& a) const;
  MumfordDivisor<T> scalar_mul(const MumfordDivisor<T>& a, long n) const;

  static CurvePoint<T> involution(const CurvePoint<T>& p);
  bool is_weierstrass(const CurvePoint<T>& p) const;
  /// The five roots of f (ascending) followed by inf. Throws DoesNotSplit.
  std::vector<CurvePoint<T>> weierstrass_points() const;

  PicClass<T> reduce_class(const FormalDivisor<T>& divisor) const;
  PicClass<T> add(const PicClass<T>& a, const PicClass<T>& b) const;
  PicClass<T> subtract(const PicClass<T>& a, const PicClass<T>& b) const;
  PicClass<T> point_class(const CurvePoint<T>& p) const;
  PicClass<T> canonical_class() const;

  /// h^0 by Riemann-Roch and Jacobi inversion on genus 2.
  long h0(const PicClass<T>& d) const;

  /// L -> K - L on Pic^1. Throws WrongDegree.
  PicClass<T> serre_involution(const PicClass<T>& line) const;

  /// The unique q1 + q2 in |K + 2M| for M in Pic^0 with 2M != 0. Throws WrongDegree,
  /// OrderTwo, or DoesNotSplit when q1, q2 are not rational over the base field.
  std::pair<CurvePoint<T>, CurvePoint<T>> km2_points(const PicClass<T>& m) const;

  /// {M + [i q1], M + [i q2]}: the classes L in Pic^1 with h0(L + M) > 0 and
  /// h0(K - L + M) > 0.
  std::pair<PicClass<T>, PicClass<T>> theta_translate_intersection(const PicClass<T>& m) const;

  /// All 16 classes of J[2], indexed by bitmask over the generators [w_i] - [inf],
  /// i = 1..4. Throws DoesNotSplit.
  std::vector<PicClass<T>> two_torsion() const;

  /// w + p + i(p), checked to lie in |K + [w]|. Throws NotWeierstrass / NotOnCurve.
  FormalDivisor<T> kx_w_pencil_member(const CurvePoint<T>& w, const CurvePoint<T>& p) const;

 private:
  Polynomial<T> f_;
};

std::vector<CurvePoint<Fp>> rational_points(const HyperellipticCurve<Fp>& curve);

inline constexpr std::uint64_t kMaxEnumerationPrime = 37;

/// Every class of degree d, in canonical order: the identity, then deg u = 1, then
/// deg u = 2. Throws FieldTooLarge for p > 37.
std::vector<PicClass<Fp>> enumerate_pic(const HyperellipticCurve<Fp>& curve, long degree);

/// Dimension bookkeeping of the multiplication map
///   H^0(K(x)) (x) H^0(K^2(x)) -> H^0(K^3(2x))
/// for a non-Weierstrass point x: the kernel is H^0(K(x)) by the base-point-free pencil trick.
struct PencilTrickChain {
  long h0_k_x;
  long h0_2k_x;
  long h0_3k_2x;
  long kernel;
  long image;
  long cokernel;
};

template <class T>
PencilTrickChain pencil_trick_chain(const HyperellipticCurve<T>& curve, const CurvePoint<T>& x);

extern template class HyperellipticCurve<Fp>;
extern template class HyperellipticCurve<Rational>;
extern template PencilTrickChain pencil_trick_chain(const HyperellipticCurve<Fp>&,
                                                    const CurvePoint<Fp>&);
extern template PencilTrickChain pencil_trick_chain(const HyperellipticCurve<Rational>&,
                                                    const CurvePoint<Rational>&);

}  // namespace theta_lab
