#pragma once

#include <optional>
#include <vector>

#include "theta_lab/polynomial.hpp"

namespace theta_lab {

/// Distinct roots in the base field, ascending.
std::vector<Fp> find_roots(const Polynomial<Fp>& f);
std::vector<Rational> find_roots(const Polynomial<Rational>& f);

std::optional<Fp> field_sqrt(const Fp& a);
std::optional<Rational> field_sqrt(const Rational& a);

}  // namespace theta_lab
