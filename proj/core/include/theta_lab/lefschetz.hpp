#pragma once

#include <array>
#include <span>
#include <vector>

#include "theta_lab/rational.hpp"

namespace theta_lab {

/// Local contribution of one isolated fixed point: trace of the linearization on the
/// fibre, divided by det(I - d gamma). For an involution modelled by z -> -z on a
/// curve, det(I - d gamma) = 2.
struct FixedPointDatum {
  Rational trace;
  Rational jacobian_det{2};
};

struct LefschetzScenario {
  std::vector<FixedPointDatum> fixed_points;
  long h0_total = 0;
  long h1_total = 0;
  /// Dimension of the invariant part of H^0. Must not exceed h0_total.
  long h0_plus = 0;
};

/// Sum over fixed points of trace / det(I - d gamma).
Rational lefschetz_number(const LefschetzScenario& scenario);

struct EigenSplit {
  long plus;
  long minus;

  friend bool operator==(const EigenSplit&, const EigenSplit&) = default;
};

/// Solves (h0+ - h0-) - (h1+ - h1-) = L together with h1+ + h1- = h1_total.
/// Throws Infeasible when there is no nonnegative integer solution.
EigenSplit split_eigendims(const LefschetzScenario& scenario);

/// Scenario with `count_other` Weierstrass points of trace `trace_other` and one
/// distinguished point of trace `trace_w`, all with det(I - d gamma) = 2.
LefschetzScenario weierstrass_scenario(long trace_other, long trace_w, long h0_total,
                                       long h1_total, long h0_plus, int count_other = 5);

// Linearization of the hyperelliptic involution on a rank-2 bundle E that locally looks
// like O(-w) + O. The action on O(-w) is normalised to -1 over Weierstrass points
// p != w and +1 over w; on O it is trivial up to a global sign. A fibre action is
// recorded by its two diagonal eigenvalues (on O(-w), on O).
using FibreAction = std::array<long, 2>;

struct Linearization {
  FibreAction away_from_w;
  FibreAction at_w;
};

/// The two linearizations compatible with the normalisation: the global sign on the
/// trivial summand is +1 or -1.
Linearization linearization_trivial_sign(long sign_on_trivial);

/// Trace on Sym^2 of a diagonal action diag(a, b): a^2 + ab + b^2.
long sym2_trace(const FibreAction& action);
/// Trace on Hom(F, E) of diagonal +-1 actions: sum_{i,j} e_i / f_j.
long hom_trace(std::span<const long> source, std::span<const long> target);

/// Sym^2 E with h^0 = 0 and h^1 = 6: global sign -1 on O (traces 3 away from w, 1 at w).
LefschetzScenario sym2_rejected_scenario();
/// Sym^2 E with the other sign (traces 1 away from w, 3 at w).
LefschetzScenario sym2_scenario();
/// Hom(E_f, E_e): no sections, h^1 = 4, traces 0 away from w and 4 at w.
LefschetzScenario hom_ee_scenario();
/// Hom(O(-w), E_e): one equivariant section, h^1 = 2, traces 0 away from w and 2 at w.
LefschetzScenario hom_ow_scenario();

}  // namespace theta_lab
