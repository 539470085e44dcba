#include "theta_lab/hilbert_fit.hpp"

#include <array>
#include <utility>

#include "theta_lab/error.hpp"

namespace theta_lab {
namespace {

constexpr int kAdjointDynkinIndexC2 = 6;

/// (n+1)(n+2)(n+3)^2(n+4)(n+5)
Rational fixed_factor(const Rational& n) {
  const Rational m = n + Rational(3);
  return (n + Rational(1)) * (n + Rational(2)) * m * m * (n + Rational(4)) * (n + Rational(5));
}

using Matrix3 = std::array<std::array<Rational, 4>, 3>;

/// Gauss-Jordan elimination on an augmented 3x4 system.
std::array<Rational, 3> solve3(Matrix3 a) {
  for (std::size_t col = 0; col < 3; ++col) {
    std::size_t pivot = col;
    while (pivot < 3 && a[pivot][col].is_zero()) ++pivot;
    if (pivot == 3) fail(ErrorCode::kSingularSystem, "Hilbert fit system is singular");
    std::swap(a[col], a[pivot]);
    const Rational inv = a[col][col].inverse();
    for (auto& entry : a[col]) entry *= inv;
    for (std::size_t row = 0; row < 3; ++row) {
      if (row == col || a[row][col].is_zero()) continue;
      const Rational factor = a[row][col];
      for (std::size_t k = 0; k < 4; ++k) a[row][k] -= factor * a[col][k];
    }
  }
  return {a[0][3], a[1][3], a[2][3]};
}

}  // namespace

HilbertFit fit_hilbert(const BigInt& p0, const BigInt& p1, const BigInt& p2) {
  // p(n) = F(n) * (x0 M^2 - x1 M + x2) with x0 = gamma, x1 = gamma sigma, x2 = gamma pi.
  const std::array<BigInt, 3> values{p0, p1, p2};
  Matrix3 system;
  for (std::size_t row = 0; row < 3; ++row) {
    const Rational n(static_cast<long>(row));
    const Rational f = fixed_factor(n);
    const Rational m = (n + Rational(3)) * (n + Rational(3));
    system[row] = {f * m * m, -(f * m), f, Rational(values[row])};
  }
  const auto [x0, x1, x2] = solve3(system);
  if (x0.is_zero()) {
    fail(ErrorCode::kSingularSystem, "fitted leading coefficient vanishes");
  }
  const Rational chern = x0 * Rational(factorial(10));
  if (!chern.is_integer()) {
    fail(ErrorCode::kNonIntegralChern, "10! * gamma = " + chern.to_string() + " is not an integer");
  }
  return {x0, x1 / x0, x2 / x0, chern.numerator()};
}

Rational evaluate(const HilbertFit& fit, const Rational& n) {
  const Rational m = (n + Rational(3)) * (n + Rational(3));
  return fit.gamma * fixed_factor(n) * (m * m - fit.sigma * m + fit.pi);
}

Polynomial<Rational> HilbertFit::expanded() const {
  using P = Polynomial<Rational>;
  const auto linear = [](long c) { return P(std::vector<Rational>{Rational(c), Rational(1)}); };
  const P m = linear(3) * linear(3);
  const P quartic = m * m - m * sigma + P::constant(pi);
  return linear(1) * linear(2) * m * linear(4) * linear(5) * quartic * gamma;
}

Rational symmetry_center(const HilbertFit& fit) {
  const auto p = fit.expanded();
  const int d = p.degree();
  // Symmetric about c means p(n) = lc (n - c)^d + ... with no shifted odd term,
  // so the subleading coefficient is -d c lc.
  return -p[static_cast<std::size_t>(d - 1)] /
         (p[static_cast<std::size_t>(d)] * Rational(static_cast<long>(d)));
}

int canonical_power() { return -kAdjointDynkinIndexC2; }

}  // namespace theta_lab
