#include "theta_lab/lefschetz.hpp"

#include <string>

#include "theta_lab/error.hpp"

namespace theta_lab {

Rational lefschetz_number(const LefschetzScenario& scenario) {
  Rational sum;
  for (const auto& point : scenario.fixed_points) {
    if (point.jacobian_det.is_zero()) {
      fail(ErrorCode::kInvalidArgument, "det(I - d gamma) must be nonzero at a fixed point");
    }
    sum += point.trace / point.jacobian_det;
  }
  return sum;
}

EigenSplit split_eigendims(const LefschetzScenario& s) {
  if (s.h0_plus < 0 || s.h0_plus > s.h0_total || s.h1_total < 0) {
    fail(ErrorCode::kInvalidArgument, "scenario dimensions out of range");
  }
  const Rational number = lefschetz_number(s);
  // h1+ - h1- = (h0+ - h0-) - L
  const Rational difference = Rational(2 * s.h0_plus - s.h0_total) - number;
  const Rational plus = (Rational(s.h1_total) + difference) / Rational(2);
  if (!plus.is_integer() || plus < Rational(0) || plus > Rational(s.h1_total)) {
    fail(ErrorCode::kInfeasible, "no eigenspace split: h1+ - h1- = " + difference.to_string() +
                                     " with h1+ + h1- = " + std::to_string(s.h1_total));
  }
  const long h1_plus = plus.numerator().get_si();
  return {h1_plus, s.h1_total - h1_plus};
}

LefschetzScenario weierstrass_scenario(long trace_other, long trace_w, long h0_total,
                                       long h1_total, long h0_plus, int count_other) {
  LefschetzScenario s;
  s.fixed_points.assign(static_cast<std::size_t>(count_other),
                        FixedPointDatum{Rational(trace_other), Rational(2)});
  s.fixed_points.push_back({Rational(trace_w), Rational(2)});
  s.h0_total = h0_total;
  s.h1_total = h1_total;
  s.h0_plus = h0_plus;
  return s;
}

Linearization linearization_trivial_sign(long sign_on_trivial) {
  return {{-1, sign_on_trivial}, {1, sign_on_trivial}};
}

long sym2_trace(const FibreAction& a) { return a[0] * a[0] + a[0] * a[1] + a[1] * a[1]; }

long hom_trace(std::span<const long> source, std::span<const long> target) {
  long trace = 0;
  for (long f : source) {
    for (long e : target) trace += e * f;  // f = +-1 is its own inverse
  }
  return trace;
}

namespace {

LefschetzScenario sym2_with_sign(long sign) {
  const Linearization lin = linearization_trivial_sign(sign);
  return weierstrass_scenario(sym2_trace(lin.away_from_w), sym2_trace(lin.at_w), 0, 6, 0);
}

// Both E_e and E_f carry the surviving (+1) linearization.
const Linearization kSurviving = linearization_trivial_sign(1);

}  // namespace

LefschetzScenario sym2_rejected_scenario() { return sym2_with_sign(-1); }

LefschetzScenario sym2_scenario() { return sym2_with_sign(1); }

LefschetzScenario hom_ee_scenario() {
  return weierstrass_scenario(hom_trace(kSurviving.away_from_w, kSurviving.away_from_w),
                              hom_trace(kSurviving.at_w, kSurviving.at_w), 0, 4, 0);
}

LefschetzScenario hom_ow_scenario() {
  // O(-w) acts like the first summand of E_e.
  const std::array<long, 1> away{kSurviving.away_from_w[0]};
  const std::array<long, 1> at_w{kSurviving.at_w[0]};
  return weierstrass_scenario(hom_trace(away, kSurviving.away_from_w), hom_trace(at_w, kSurviving.at_w),
                              1, 2, 1);
}

}  // namespace theta_lab
