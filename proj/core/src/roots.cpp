#include "theta_lab/roots.hpp"

#include <algorithm>

namespace theta_lab {
namespace {

using FpPoly = Polynomial<Fp>;

FpPoly linear(const Fp& shift) {  // x + shift
  return FpPoly(std::vector<Fp>{shift, one_like(shift)});
}

void split_distinct(const FpPoly& g, std::vector<Fp>& out) {
  if (g.degree() <= 0) return;
  if (g.degree() == 1) {
    out.push_back(-g[0] / g[1]);
    return;
  }
  const std::uint64_t p = g.leading().modulus();
  // Equal-degree splitting with deterministic shifts: gcd(g, (x + a)^((p-1)/2) - 1).
  for (std::uint64_t a = 0; a < p; ++a) {
    const Fp shift(p, static_cast<std::int64_t>(a));
    const FpPoly h = pow_mod(linear(shift), (p - 1) / 2, g) - FpPoly::constant(one_like(shift));
    const FpPoly d = gcd(g, h);
    if (d.degree() > 0 && d.degree() < g.degree()) {
      split_distinct(d, out);
      split_distinct(g / d, out);
      return;
    }
  }
}

std::vector<BigInt> positive_divisors(BigInt n) {
  if (n < 0) n = -n;
  std::vector<BigInt> small, large;
  for (BigInt d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

std::vector<Fp> find_roots(const Polynomial<Fp>& f) {
  if (f.degree() <= 0) return {};
  const FpPoly monic = f.monic();
  const Fp one = one_like(monic.leading());
  const std::uint64_t p = one.modulus();
  // Product of the distinct linear factors: gcd(f, x^p - x).
  const FpPoly x = FpPoly::monomial(one, 1);
  const FpPoly g = gcd(monic, pow_mod(x, p, monic) - x);
  std::vector<Fp> roots;
  split_distinct(g, roots);
  std::sort(roots.begin(), roots.end(),
            [](const Fp& a, const Fp& b) { return a.value() < b.value(); });
  return roots;
}

std::vector<Rational> find_roots(const Polynomial<Rational>& f) {
  if (f.degree() <= 0) return {};
  // Integer multiple of f, then the rational root theorem.
  BigInt scale = 1;
  for (const auto& c : f.coefficients()) scale = lcm(scale, c.denominator());
  std::vector<BigInt> ints;
  for (const auto& c : f.coefficients()) ints.push_back((c * Rational(scale)).numerator());
  std::vector<Rational> roots;
  std::size_t low = 0;
  while (ints[low] == 0) ++low;
  if (low > 0) roots.emplace_back(0);
  const BigInt& constant = ints[low];
  const BigInt& lead = ints.back();
  for (const auto& num : positive_divisors(constant)) {
    for (const auto& den : positive_divisors(lead)) {
      for (const int sign : {1, -1}) {
        const Rational candidate(BigInt(sign * num), den);
        if (f.eval(candidate).is_zero() &&
            std::find(roots.begin(), roots.end(), candidate) == roots.end()) {
          roots.push_back(candidate);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::optional<Fp> field_sqrt(const Fp& a) { return a.sqrt(); }

std::optional<Rational> field_sqrt(const Rational& a) {
  if (a.sign() < 0) return std::nullopt;
  const BigInt num = a.numerator();
  const BigInt den = a.denominator();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
    return std::nullopt;
  }
  return Rational(BigInt(sqrt(num)), BigInt(sqrt(den)));
}

}  // namespace theta_lab
