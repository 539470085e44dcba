#include "theta_lab/approx.hpp"

#include <iomanip>
#include <sstream>

#include <boost/math/constants/constants.hpp>

namespace theta_lab {

HighPrecision approx(const Rational& value) {
  return HighPrecision(value.numerator().get_str()) / HighPrecision(value.denominator().get_str());
}

namespace {

template <class Trig>
HighPrecision evaluate(const CyclotomicElement& value, Trig trig) {
  const HighPrecision two_pi = 2 * boost::math::constants::pi<HighPrecision>();
  HighPrecision sum = 0;
  const auto& coeffs = value.coefficients();
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (coeffs[j].is_zero()) continue;
    sum += approx(coeffs[j]) * trig(two_pi * j / value.modulus());
  }
  return sum;
}

}  // namespace

HighPrecision approx_real(const CyclotomicElement& value) {
  return evaluate(value, [](const HighPrecision& x) { return HighPrecision(cos(x)); });
}

HighPrecision approx_imag(const CyclotomicElement& value) {
  return evaluate(value, [](const HighPrecision& x) { return HighPrecision(sin(x)); });
}

std::string format_decimal(const HighPrecision& value, int digits) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << value;
  return os.str();
}

}  // namespace theta_lab
