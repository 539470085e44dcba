#pragma once

#include <string>

#include <boost/multiprecision/mpfr.hpp>

#include "theta_lab/cyclotomic.hpp"
#include "theta_lab/rational.hpp"

namespace theta_lab {

/// 50 decimal digits (about 166 bits of mantissa). Only used for cross-checks and
/// `--approx` output; the exact engine never touches it.
using HighPrecision = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<50>>;

HighPrecision approx(const Rational& value);

/// Real part of the complex embedding zeta_N -> exp(2*pi*i/N).
HighPrecision approx_real(const CyclotomicElement& value);
HighPrecision approx_imag(const CyclotomicElement& value);

/// Fixed-point decimal rendering with `digits` places after the point.
std::string format_decimal(const HighPrecision& value, int digits);

}  // namespace theta_lab
