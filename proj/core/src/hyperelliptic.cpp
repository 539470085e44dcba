#include "theta_lab/hyperelliptic.hpp"

#include <algorithm>
#include <type_traits>

#include "theta_lab/error.hpp"
#include "theta_lab/roots.hpp"

namespace theta_lab {

std::string BaseField::to_string() const {
  return kind == Kind::kRationals ? "Q" : "Fp:" + std::to_string(characteristic);
}

template <class T>
HyperellipticCurve<T>::HyperellipticCurve(Polynomial<T> f) : f_(std::move(f)) {
  if (f_.degree() != 5 || !f_.is_monic()) {
    fail(ErrorCode::kInvalidArgument, "f must be a monic polynomial of degree 5");
  }
  if constexpr (std::is_same_v<T, Fp>) {
    const std::uint64_t p = f_.leading().modulus();
    if (p == 2) fail(ErrorCode::kEvenCharacteristic, "characteristic 2 is not supported");
    if (!is_prime(p)) fail(ErrorCode::kNotPrime, std::to_string(p) + " is not prime");
    if (p >= (std::uint64_t{1} << 32)) {
      fail(ErrorCode::kFieldTooLarge, "prime fields are limited to p < 2^32");
    }
  }
  if (gcd(f_, f_.derivative()).degree() > 0) {
    fail(ErrorCode::kNotSquarefree, "f = " + f_.to_string() + " has a repeated factor");
  }
}

template <class T>
BaseField HyperellipticCurve<T>::base_field() const {
  if constexpr (std::is_same_v<T, Fp>) {
    return BaseField::prime(f_.leading().modulus());
  } else {
    return BaseField::rationals();
  }
}

template <class T>
bool HyperellipticCurve<T>::contains(const CurvePoint<T>& p) const {
  return p.infinity || p.y * p.y == f_.eval(p.x);
}

template <class T>
bool HyperellipticCurve<T>::is_valid(const MumfordDivisor<T>& d) const {
  if (d.u.is_zero() || !d.u.is_monic() || d.u.degree() > 2) return false;
  if (d.v.degree() >= d.u.degree()) return false;
  return ((d.v * d.v - f_) % d.u).is_zero();
}

template <class T>
void HyperellipticCurve<T>::require_valid(const MumfordDivisor<T>& d) const {
  if (!is_valid(d)) {
    fail(ErrorCode::kInvalidDivisor, "(" + d.to_string() + ") is not a reduced Mumford pair");
  }
}

template <class T>
MumfordDivisor<T> HyperellipticCurve<T>::identity() const {
  return {Polynomial<T>::constant(one()), Polynomial<T>{}};
}

template <class T>
MumfordDivisor<T> HyperellipticCurve<T>::point_divisor(const CurvePoint<T>& p) const {
  if (!contains(p)) fail(ErrorCode::kNotOnCurve, p.to_string() + " is not on the curve");
  if (p.infinity) return identity();
  return {Polynomial<T>(std::vector<T>{-p.x, one()}), Polynomial<T>::constant(p.y)};
}

template <class T>
MumfordDivisor<T> HyperellipticCurve<T>::cantor_add(const MumfordDivisor<T>& a,
                                                    const MumfordDivisor<T>& b) const {
  if (a.u.degree() == 0) return b;
  if (b.u.degree() == 0) return a;

  // Composition.
  auto [d0, e1, e2] = xgcd(a.u, b.u);
  auto [d, c1, c2] = xgcd(d0, a.v + b.v);
  const Polynomial<T> s1 = c1 * e1;
  const Polynomial<T> s2 = c1 * e2;
  const Polynomial<T>& s3 = c2;
  Polynomial<T> u = (a.u * b.u) / (d * d);
  Polynomial<T> v =
      ((s1 * a.u * b.v + s2 * b.u * a.v + s3 * (a.v * b.v + f_)) / d) % u;

  // Reduction down to deg u <= genus.
  while (u.degree() > 2) {
    u = ((f_ - v * v) / u).monic();
    v = (-v) % u;
  }
  u = u.monic();
  v = v % u;
  return {std::move(u), std::move(v)};
}

template <class T>
MumfordDivisor<T> HyperellipticCurve<T>::negate(const MumfordDivisor<T>& a) const {
  return {a.u, (-a.v) % a.u};
}

template <class T>
MumfordDivisor<T> HyperellipticCurve<T>::scalar_mul(const MumfordDivisor<T>& a, long n) const {
  MumfordDivisor<T> base = n < 0 ? negate(a) : a;
  unsigned long k = n < 0 ? 0UL - static_cast<unsigned long>(n) : static_cast<unsigned long>(n);
  MumfordDivisor<T> result = identity();
  while (k > 0) {
    if (k & 1UL) result = cantor_add(result, base);
    base = cantor_add(base, base);
    k >>= 1U;
  }
  return result;
}

template <class T>
CurvePoint<T> HyperellipticCurve<T>::involution(const CurvePoint<T>& p) {
  if (p.infinity) return p;
  return CurvePoint<T>::affine(p.x, -p.y);
}

template <class T>
bool HyperellipticCurve<T>::is_weierstrass(const CurvePoint<T>& p) const {
  return contains(p) && involution(p) == p;
}

template <class T>
std::vector<CurvePoint<T>> HyperellipticCurve<T>::weierstrass_points() const {
  const std::vector<T> roots = find_roots(f_);
  if (roots.size() != 5) {
    fail(ErrorCode::kDoesNotSplit, "f = " + f_.to_string() + " does not split over " +
                                       base_field().to_string());
  }
  std::vector<CurvePoint<T>> points;
  for (const auto& r : roots) points.push_back(CurvePoint<T>::affine(r, zero()));
  points.push_back(CurvePoint<T>::at_infinity());
  return points;
}

template <class T>
PicClass<T> HyperellipticCurve<T>::reduce_class(const FormalDivisor<T>& divisor) const {
  MumfordDivisor<T> base = identity();
  for (const auto& [point, mult] : divisor.terms) {
    base = cantor_add(base, scalar_mul(point_divisor(point), mult));
  }
  return {std::move(base), divisor.degree()};
}

template <class T>
PicClass<T> HyperellipticCurve<T>::add(const PicClass<T>& a, const PicClass<T>& b) const {
  return {cantor_add(a.base, b.base), a.degree + b.degree};
}

template <class T>
PicClass<T> HyperellipticCurve<T>::subtract(const PicClass<T>& a, const PicClass<T>& b) const {
  return {cantor_add(a.base, negate(b.base)), a.degree - b.degree};
}

template <class T>
PicClass<T> HyperellipticCurve<T>::point_class(const CurvePoint<T>& p) const {
  return {point_divisor(p), 1};
}

template <class T>
PicClass<T> HyperellipticCurve<T>::canonical_class() const {
  return {identity(), 2};
}

template <class T>
long HyperellipticCurve<T>::h0(const PicClass<T>& d) const {
  const bool trivial_base = d.base.u.degree() == 0;
  if (d.degree < 0) return 0;
  switch (d.degree) {
    case 0: return trivial_base ? 1 : 0;
    // base + [inf] = D_fin + (1 - deg u)[inf] is effective iff deg u <= 1.
    case 1: return d.base.u.degree() <= 1 ? 1 : 0;
    case 2: return trivial_base ? 2 : 1;
    default: return d.degree - 1;
  }
}

template <class T>
PicClass<T> HyperellipticCurve<T>::serre_involution(const PicClass<T>& line) const {
  if (line.degree != 1) {
    fail(ErrorCode::kWrongDegree,
         "Serre involution acts on Pic^1, got degree " + std::to_string(line.degree));
  }
  return subtract(canonical_class(), line);
}

template <class T>
std::pair<CurvePoint<T>, CurvePoint<T>> HyperellipticCurve<T>::km2_points(
    const PicClass<T>& m) const {
  if (m.degree != 0) {
    fail(ErrorCode::kWrongDegree, "M must have degree 0, got " + std::to_string(m.degree));
  }
  require_valid(m.base);
  // K + 2M = 2[inf] + 2M = D_fin + (2 - deg u)[inf] with (u, v) the reduced form of 2M.
  const MumfordDivisor<T> twice = cantor_add(m.base, m.base);
  const Polynomial<T>& u = twice.u;
  const Polynomial<T>& v = twice.v;
  if (u.degree() == 0) fail(ErrorCode::kOrderTwo, "2M = 0, so |K + 2M| = |K| is a pencil");
  const std::vector<T> roots = find_roots(u);
  const auto point_over = [&](const T& x) { return CurvePoint<T>::affine(x, v.eval(x)); };
  if (u.degree() == 1) return {point_over(roots.at(0)), CurvePoint<T>::at_infinity()};
  if (roots.size() == 2) return {point_over(roots[0]), point_over(roots[1])};
  if (roots.size() == 1) return {point_over(roots[0]), point_over(roots[0])};  // u = (x - r)^2
  fail(ErrorCode::kDoesNotSplit,
       "q1 + q2 is a conjugate pair (u = " + u.to_string() + " is irreducible)");
}

template <class T>
std::pair<PicClass<T>, PicClass<T>> HyperellipticCurve<T>::theta_translate_intersection(
    const PicClass<T>& m) const {
  const auto [q1, q2] = km2_points(m);
  return {add(m, point_class(involution(q1))), add(m, point_class(involution(q2)))};
}

template <class T>
std::vector<PicClass<T>> HyperellipticCurve<T>::two_torsion() const {
  const auto w = weierstrass_points();
  std::vector<PicClass<T>> out;
  for (unsigned mask = 0; mask < 16; ++mask) {
    MumfordDivisor<T> sum = identity();
    for (unsigned i = 0; i < 4; ++i) {
      if (mask & (1U << i)) sum = cantor_add(sum, point_divisor(w[i]));
    }
    out.push_back({std::move(sum), 0});
  }
  return out;
}

template <class T>
FormalDivisor<T> HyperellipticCurve<T>::kx_w_pencil_member(const CurvePoint<T>& w,
                                                           const CurvePoint<T>& p) const {
  if (!contains(p)) fail(ErrorCode::kNotOnCurve, p.to_string() + " is not on the curve");
  if (!is_weierstrass(w)) fail(ErrorCode::kNotWeierstrass, w.to_string() + " is not a Weierstrass point");
  FormalDivisor<T> divisor{{{w, 1}, {p, 1}, {involution(p), 1}}};
  if (!(reduce_class(divisor) == add(canonical_class(), point_class(w)))) {
    fail(ErrorCode::kInvalidDivisor, "w + p + i(p) fell outside |K + w|");
  }
  return divisor;
}

template <class T>
PencilTrickChain pencil_trick_chain(const HyperellipticCurve<T>& curve, const CurvePoint<T>& x) {
  if (!curve.contains(x)) fail(ErrorCode::kNotOnCurve, x.to_string() + " is not on the curve");
  if (curve.is_weierstrass(x)) {
    fail(ErrorCode::kInvalidArgument, "the pencil trick chain needs a non-Weierstrass point");
  }
  const PicClass<T> k = curve.canonical_class();
  const PicClass<T> px = curve.point_class(x);
  const PicClass<T> k_x = curve.add(k, px);
  const PicClass<T> k2_x = curve.add(k, k_x);
  const PicClass<T> k3_2x = curve.add(k_x, k2_x);
  PencilTrickChain chain{};
  chain.h0_k_x = curve.h0(k_x);
  chain.h0_2k_x = curve.h0(k2_x);
  chain.h0_3k_2x = curve.h0(k3_2x);
  chain.kernel = chain.h0_k_x;
  chain.image = chain.h0_k_x * chain.h0_2k_x - chain.kernel;
  chain.cokernel = chain.h0_3k_2x - chain.image;
  return chain;
}

std::vector<CurvePoint<Fp>> rational_points(const HyperellipticCurve<Fp>& curve) {
  const std::uint64_t p = curve.f().leading().modulus();
  if (p > (std::uint64_t{1} << 20)) {
    fail(ErrorCode::kFieldTooLarge, "point enumeration is limited to p <= 2^20");
  }
  std::vector<CurvePoint<Fp>> points;
  for (std::uint64_t a = 0; a < p; ++a) {
    const Fp x(p, static_cast<std::int64_t>(a));
    const Fp rhs = curve.f().eval(x);
    const auto root = rhs.sqrt();
    if (!root) continue;
    if (root->is_zero()) {
      points.push_back(CurvePoint<Fp>::affine(x, *root));
      continue;
    }
    const Fp lo = root->value() < (-*root).value() ? *root : -*root;
    points.push_back(CurvePoint<Fp>::affine(x, lo));
    points.push_back(CurvePoint<Fp>::affine(x, -lo));
  }
  points.push_back(CurvePoint<Fp>::at_infinity());
  return points;
}

std::vector<PicClass<Fp>> enumerate_pic(const HyperellipticCurve<Fp>& curve, long degree) {
  const std::uint64_t p = curve.f().leading().modulus();
  if (p > kMaxEnumerationPrime) {
    fail(ErrorCode::kFieldTooLarge, "Pic enumeration is limited to p <= " +
                                        std::to_string(kMaxEnumerationPrime));
  }
  using FpPoly = Polynomial<Fp>;
  const auto elem = [p](std::uint64_t a) { return Fp(p, static_cast<std::int64_t>(a)); };
  std::vector<PicClass<Fp>> out;
  out.push_back({curve.identity(), degree});

  // deg u = 1: u = x - a, v = b with b^2 = f(a).
  for (std::uint64_t a = 0; a < p; ++a) {
    const Fp fa = curve.f().eval(elem(a));
    for (std::uint64_t b = 0; b < p; ++b) {
      if (elem(b) * elem(b) == fa) {
        out.push_back({{FpPoly({-elem(a), elem(1)}), FpPoly::constant(elem(b))}, degree});
      }
    }
  }

  // deg u = 2: u = x^2 + a1 x + a0, v = v1 x + v0, v^2 = f mod u.
  // With x^2 = -a1 x - a0: v^2 = (2 v0 v1 - a1 v1^2) x + (v0^2 - a0 v1^2).
  for (std::uint64_t a1 = 0; a1 < p; ++a1) {
    for (std::uint64_t a0 = 0; a0 < p; ++a0) {
      const FpPoly u({elem(a0), elem(a1), elem(1)});
      const FpPoly r = curve.f() % u;
      const std::uint64_t r0 = r.coeff(0, elem(0)).value();
      const std::uint64_t r1 = r.coeff(1, elem(0)).value();
      for (std::uint64_t v1 = 0; v1 < p; ++v1) {
        const std::uint64_t v1sq = v1 * v1 % p;
        for (std::uint64_t v0 = 0; v0 < p; ++v0) {
          const std::uint64_t c1 = (2 * v0 * v1 + p * p - a1 * v1sq) % p;
          const std::uint64_t c0 = (v0 * v0 + p * p - a0 * v1sq) % p;
          if (c1 == r1 && c0 == r0) {
            out.push_back({{u, FpPoly({elem(v0), elem(v1)})}, degree});
          }
        }
      }
    }
  }
  return out;
}

template class HyperellipticCurve<Fp>;
template class HyperellipticCurve<Rational>;
template PencilTrickChain pencil_trick_chain(const HyperellipticCurve<Fp>&, const CurvePoint<Fp>&);
template PencilTrickChain pencil_trick_chain(const HyperellipticCurve<Rational>&,
                                             const CurvePoint<Rational>&);

}  // namespace theta_lab
