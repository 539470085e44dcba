#pragma once

#include <array>
#include <string>
#include <string_view>
#include <variant>

#include "theta_lab/hyperelliptic.hpp"

namespace theta_lab {

/// Text form `field=Q|Fp:<p>; f=<c0,c1,c2,c3,c4>` describing y^2 = x^5 + c4 x^4 + ... + c0.
struct CurveSpec {
  BaseField field;
  std::array<Rational, 5> coeffs;  // c0 .. c4

  /// Canonical text; coefficients are reduced to least nonnegative residues over F_p.
  std::string to_string() const;
};

CurveSpec parse_curve_spec(std::string_view text);

using AnyCurve = std::variant<HyperellipticCurve<Rational>, HyperellipticCurve<Fp>>;

/// Validated curve from a field and the six coefficients f_0..f_5 of a monic quintic.
AnyCurve new_curve(const BaseField& field, const std::array<Rational, 6>& f_coeffs);
AnyCurve new_curve(const CurveSpec& spec);

/// Element of the field of `like` from an exact rational (reduced mod p for F_p).
Fp to_field(const Rational& value, const Fp& like);
Rational to_field(const Rational& value, const Rational& like);

/// Parses "x^2 + 3*x - 1/2", "2x", "-x^3" and similar, with coefficients in the field of `like`.
template <class T>
Polynomial<T> parse_polynomial(std::string_view text, const T& like);

/// Parses "u=<poly>; v=<poly>[; deg=<d>]" and validates it on `curve`.
template <class T>
PicClass<T> parse_class(const HyperellipticCurve<T>& curve, std::string_view text);

/// Parses "(x, y)" or "inf" and checks the point lies on `curve`.
template <class T>
CurvePoint<T> parse_point(const HyperellipticCurve<T>& curve, std::string_view text);

}  // namespace theta_lab
