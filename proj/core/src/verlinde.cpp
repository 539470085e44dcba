#include "theta_lab/verlinde.hpp"

#include <string>

#include "theta_lab/error.hpp"

namespace theta_lab {

VerlindePair::VerlindePair(int s, int t) : s_(s), t_(t) {
  if (s < 1 || t < 1 || s + t > 4) {
    fail(ErrorCode::kInvalidArgument,
         "(" + std::to_string(s) + ", " + std::to_string(t) + ") is not a level-2 pair");
  }
}

std::vector<VerlindePair> admissible_pairs() {
  std::vector<VerlindePair> pairs;
  for (int s = 1; s <= 3; ++s) {
    for (int t = 1; s + t <= 4; ++t) pairs.emplace_back(s, t);
  }
  return pairs;
}

CyclotomicElement s_factor(const VerlindePair& pair) {
  const int s = pair.s();
  const int t = pair.t();
  return CyclotomicElement(Rational(16)) * cyclo_sin(s + t, 5) * cyclo_sin(t, 5) *
         cyclo_sin(s, 10) * cyclo_sin(s + 2 * t, 10);
}

BigInt verlinde_p2() {
  CyclotomicElement sum;
  for (const auto& pair : admissible_pairs()) {
    const CyclotomicElement s = s_factor(pair);
    sum += (s * s).inverse();
  }
  const Rational value = cyclo_to_rational(sum * CyclotomicElement(Rational(100)));
  if (!value.is_integer()) {
    fail(ErrorCode::kNotInteger, "Verlinde sum " + value.to_string() + " is not an integer");
  }
  return value.numerator();
}

HilbertValues hilbert_values() {
  return {BigInt(kVerlindeP0), BigInt(kVerlindeP1), verlinde_p2()};
}

EigenDims theta_eigendims(long n, long g) {
  if (n < 1 || g < 2) {
    fail(ErrorCode::kInvalidArgument, "theta_eigendims requires n >= 1 and g >= 2");
  }
  BigInt n_to_g;
  mpz_ui_pow_ui(n_to_g.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(g));
  BigInt half_two_g;
  mpz_ui_pow_ui(half_two_g.get_mpz_t(), 2, static_cast<unsigned long>(g - 1));
  return {2 * n_to_g + half_two_g, 2 * n_to_g - half_two_g};
}

}  // namespace theta_lab
