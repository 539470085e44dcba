#pragma once

#include <cassert>
#include <cstddef>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "theta_lab/error.hpp"
#include "theta_lab/prime_field.hpp"
#include "theta_lab/rational.hpp"

namespace theta_lab {

/// Uniform access to constants of a coefficient field. Elements of F_p carry their
/// modulus, so constants are produced "like" an existing element.
template <class T>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
  static Rational from_int(const Rational& /*like*/, long n) { return Rational(n); }
  static std::string to_string(const Rational& value) { return value.to_string(); }
  static bool is_negative(const Rational& value) { return value.sign() < 0; }
};

template <>
struct FieldTraits<Fp> {
  static Fp from_int(const Fp& like, long n) { return Fp(like.modulus(), n); }
  static std::string to_string(const Fp& value) { return value.to_string(); }
  static bool is_negative(const Fp& /*value*/) { return false; }
};

template <class T>
T zero_like(const T& like) {
  return FieldTraits<T>::from_int(like, 0);
}

template <class T>
T one_like(const T& like) {
  return FieldTraits<T>::from_int(like, 1);
}

/// Dense univariate polynomial, coefficients stored from degree 0 upwards with no
/// trailing zeros. The zero polynomial has degree -1.
template <class T>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

  static Polynomial constant(const T& c) { return Polynomial(std::vector<T>{c}); }

  /// c * x^n
  static Polynomial monomial(const T& c, std::size_t n) {
    std::vector<T> coeffs(n + 1, zero_like(c));
    coeffs[n] = c;
    return Polynomial(std::move(coeffs));
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const T& leading() const {
    assert(!is_zero());
    return coeffs_.back();
  }
  const T& operator[](std::size_t i) const { return coeffs_.at(i); }
  const std::vector<T>& coefficients() const { return coeffs_; }

  /// Coefficient of x^i, or zero (made like `like`) past the degree.
  T coeff(std::size_t i, const T& like) const {
    return i < coeffs_.size() ? coeffs_[i] : zero_like(like);
  }

  bool is_monic() const { return !is_zero() && leading() == one_like(leading()); }

  Polynomial monic() const {
    if (is_zero()) return *this;
    return *this * leading().inverse();
  }

  T eval(const T& x) const {
    T acc = zero_like(x);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = acc * x + *it;
    }
    return acc;
  }

  Polynomial derivative() const {
    std::vector<T> out;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
      out.push_back(coeffs_[i] * FieldTraits<T>::from_int(coeffs_[i], static_cast<long>(i)));
    }
    return Polynomial(std::move(out));
  }

  Polynomial& operator+=(const Polynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) {
      coeffs_.resize(rhs.coeffs_.size(), zero_like(rhs.coeffs_.back()));
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    normalize();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) {
      coeffs_.resize(rhs.coeffs_.size(), zero_like(rhs.coeffs_.back()));
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    normalize();
    return *this;
  }

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }

  Polynomial operator-() const {
    Polynomial out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
  }

  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::vector<T> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, zero_like(lhs.coeffs_[0]));
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
      if (lhs.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
        out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
      }
    }
    return Polynomial(std::move(out));
  }

  friend Polynomial operator*(Polynomial lhs, const T& scalar) {
    for (auto& c : lhs.coeffs_) c *= scalar;
    lhs.normalize();
    return lhs;
  }

  friend bool operator==(const Polynomial& lhs, const Polynomial& rhs) {
    return lhs.coeffs_ == rhs.coeffs_;
  }

  /// Canonical text, highest degree first: "x^2 - 3/2*x + 1"; the zero polynomial is "0".
  std::string to_string(char var = 'x') const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
      const T& c = coeffs_[static_cast<std::size_t>(i)];
      if (c.is_zero()) continue;
      const bool negative = FieldTraits<T>::is_negative(c);
      const T magnitude = negative ? -c : c;
      if (out.empty()) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      const bool unit = magnitude == one_like(magnitude);
      if (i == 0) {
        out += FieldTraits<T>::to_string(magnitude);
        continue;
      }
      if (!unit) out += FieldTraits<T>::to_string(magnitude) + "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
  }

 private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<T> coeffs_;
};

/// Euclidean division; the divisor must be nonzero.
template <class T>
std::pair<Polynomial<T>, Polynomial<T>> divmod(const Polynomial<T>& num,
                                               const Polynomial<T>& den) {
  if (den.is_zero()) fail(ErrorCode::kDivisionByZero, "polynomial division by zero");
  if (num.degree() < den.degree()) return {Polynomial<T>{}, num};
  std::vector<T> rem = num.coefficients();
  const T zero = zero_like(den.leading());
  const std::size_t dd = static_cast<std::size_t>(den.degree());
  std::vector<T> quot(rem.size() - dd, zero);
  const T lead_inv = den.leading().inverse();
  for (std::size_t k = rem.size(); k-- > dd;) {
    const T factor = rem[k] * lead_inv;
    quot[k - dd] = factor;
    if (factor.is_zero()) continue;
    for (std::size_t j = 0; j <= dd; ++j) rem[k - dd + j] -= factor * den[j];
  }
  rem.resize(dd, zero);
  return {Polynomial<T>(std::move(quot)), Polynomial<T>(std::move(rem))};
}

template <class T>
Polynomial<T> operator/(const Polynomial<T>& num, const Polynomial<T>& den) {
  return divmod(num, den).first;
}

template <class T>
Polynomial<T> operator%(const Polynomial<T>& num, const Polynomial<T>& den) {
  return divmod(num, den).second;
}

/// Monic gcd (zero if both inputs are zero).
template <class T>
Polynomial<T> gcd(Polynomial<T> a, Polynomial<T> b) {
  while (!b.is_zero()) {
    Polynomial<T> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Returns (g, s, t) with g = s*a + t*b and g the monic gcd. At least one input must be nonzero.
template <class T>
std::tuple<Polynomial<T>, Polynomial<T>, Polynomial<T>> xgcd(const Polynomial<T>& a,
                                                             const Polynomial<T>& b) {
  assert(!a.is_zero() || !b.is_zero());
  const T one = one_like(a.is_zero() ? b.leading() : a.leading());
  Polynomial<T> r0 = a, r1 = b;
  Polynomial<T> s0 = Polynomial<T>::constant(one), s1;
  Polynomial<T> t0, t1 = Polynomial<T>::constant(one);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::exchange(r1, std::move(r));
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  const T inv = r0.leading().inverse();
  return {r0 * inv, s0 * inv, t0 * inv};
}

template <class T>
Polynomial<T> pow_mod(Polynomial<T> base, std::uint64_t exponent, const Polynomial<T>& modulus) {
  Polynomial<T> result = Polynomial<T>::constant(one_like(modulus.leading())) % modulus;
  base = base % modulus;
  while (exponent > 0) {
    if (exponent & 1U) result = (result * base) % modulus;
    base = (base * base) % modulus;
    exponent >>= 1U;
  }
  return result;
}

}  // namespace theta_lab
