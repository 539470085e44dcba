#include "theta_lab/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "theta_lab/error.hpp"

namespace theta_lab {
namespace {

RationalPolynomial x_power_minus_one(unsigned n) {
  std::vector<Rational> coeffs(n + 1, Rational(0));
  coeffs[0] = Rational(-1);
  coeffs[n] = Rational(1);
  return RationalPolynomial(std::move(coeffs));
}

RationalPolynomial compute_cyclotomic(unsigned n) {
  RationalPolynomial result = x_power_minus_one(n);
  for (unsigned d = 1; d < n; ++d) {
    if (n % d == 0) result = result / cyclotomic_polynomial(d);
  }
  return result;
}

}  // namespace

const RationalPolynomial& cyclotomic_polynomial(unsigned modulus) {
  if (modulus == 0) fail(ErrorCode::kInvalidArgument, "cyclotomic modulus must be positive");
  // Cached per modulus; entries are never erased so references stay valid.
  static std::mutex mutex;
  static std::map<unsigned, std::unique_ptr<RationalPolynomial>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(modulus); it != cache.end()) return *it->second;
  }
  auto computed = std::make_unique<RationalPolynomial>(compute_cyclotomic(modulus));
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.try_emplace(modulus, std::move(computed));
  return *it->second;
}

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

CyclotomicElement::CyclotomicElement(const Rational& value, unsigned modulus)
    : modulus_(modulus), coeffs_(euler_phi(modulus), Rational(0)) {
  if (modulus == 0) fail(ErrorCode::kInvalidArgument, "cyclotomic modulus must be positive");
  coeffs_[0] = value;
}

CyclotomicElement::CyclotomicElement(unsigned modulus, const RationalPolynomial& residue)
    : modulus_(modulus), coeffs_(euler_phi(modulus), Rational(0)) {
  const RationalPolynomial reduced = residue % cyclotomic_polynomial(modulus);
  for (int i = 0; i <= reduced.degree(); ++i) {
    coeffs_[static_cast<std::size_t>(i)] = reduced[static_cast<std::size_t>(i)];
  }
}

CyclotomicElement CyclotomicElement::zeta_power(unsigned modulus, std::int64_t exponent) {
  if (modulus == 0) fail(ErrorCode::kInvalidArgument, "cyclotomic modulus must be positive");
  const auto n = static_cast<std::int64_t>(modulus);
  const auto e = static_cast<std::size_t>(((exponent % n) + n) % n);
  return CyclotomicElement(modulus, RationalPolynomial::monomial(Rational(1), e));
}

RationalPolynomial CyclotomicElement::as_polynomial() const { return RationalPolynomial(coeffs_); }

bool CyclotomicElement::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool CyclotomicElement::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) return false;
  }
  return true;
}

CyclotomicElement CyclotomicElement::embed(unsigned target_modulus) const {
  if (target_modulus == 0 || target_modulus % modulus_ != 0) {
    fail(ErrorCode::kInvalidArgument, "cannot embed Q(zeta_" + std::to_string(modulus_) +
                                          ") into Q(zeta_" + std::to_string(target_modulus) + ")");
  }
  if (target_modulus == modulus_) return *this;
  // zeta_N = zeta_M^(M/N)
  const std::size_t stride = target_modulus / modulus_;
  std::vector<Rational> lifted(stride * (coeffs_.size() - 1) + 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) lifted[i * stride] = coeffs_[i];
  return CyclotomicElement(target_modulus, RationalPolynomial(std::move(lifted)));
}

namespace {

unsigned common_modulus(const CyclotomicElement& a, const CyclotomicElement& b) {
  return std::lcm(a.modulus(), b.modulus());
}

}  // namespace

CyclotomicElement& CyclotomicElement::operator+=(const CyclotomicElement& rhs) {
  const unsigned n = common_modulus(*this, rhs);
  *this = embed(n);
  const CyclotomicElement other = rhs.embed(n);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

CyclotomicElement& CyclotomicElement::operator-=(const CyclotomicElement& rhs) {
  return *this += -rhs;
}

CyclotomicElement& CyclotomicElement::operator*=(const CyclotomicElement& rhs) {
  const unsigned n = common_modulus(*this, rhs);
  *this = CyclotomicElement(n, embed(n).as_polynomial() * rhs.embed(n).as_polynomial());
  return *this;
}

CyclotomicElement CyclotomicElement::inverse() const {
  if (is_zero()) fail(ErrorCode::kDivisionByZero, "inverse of zero in Q(zeta_" +
                                                     std::to_string(modulus_) + ")");
  // Phi_N is irreducible, so gcd(a, Phi_N) = 1 and s*a + t*Phi_N = 1.
  auto [g, s, t] = xgcd(as_polynomial(), cyclotomic_polynomial(modulus_));
  return CyclotomicElement(modulus_, s);
}

CyclotomicElement& CyclotomicElement::operator/=(const CyclotomicElement& rhs) {
  return *this *= rhs.inverse();
}

CyclotomicElement CyclotomicElement::operator-() const {
  CyclotomicElement out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

bool operator==(const CyclotomicElement& a, const CyclotomicElement& b) {
  const unsigned n = common_modulus(a, b);
  return a.embed(n).coeffs_ == b.embed(n).coeffs_;
}

std::string CyclotomicElement::to_string() const {
  std::ostringstream os;
  os << "[" << modulus_ << "](";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i > 0) os << ", ";
    os << coeffs_[i];
  }
  os << ")";
  return os.str();
}

CyclotomicElement cyclo_arith(const CyclotomicElement& a, const CyclotomicElement& b, CycloOp op) {
  switch (op) {
    case CycloOp::kAdd: return a + b;
    case CycloOp::kSub: return a - b;
    case CycloOp::kMul: return a * b;
    case CycloOp::kDiv: return a / b;
  }
  fail(ErrorCode::kInvalidArgument, "unknown cyclotomic operation");
}

CyclotomicElement cyclo_sin(std::int64_t k, std::int64_t m) {
  if (m < 1) fail(ErrorCode::kInvalidArgument, "cyclo_sin requires m >= 1");
  const auto n = static_cast<unsigned>(std::lcm<std::int64_t>(2 * m, 4));
  const std::int64_t zeta_step = n / (2 * m);  // zeta_2m = zeta_N^zeta_step
  const std::int64_t i_exponent = n / 4;        // i = zeta_N^(N/4)
  const std::int64_t e = zeta_step * (k % (2 * m));
  // (z^e - z^-e) / (2i) = -(i/2) (z^e - z^-e) = (z^(N/4 - e) - z^(N/4 + e)) / 2
  CyclotomicElement value = CyclotomicElement::zeta_power(n, i_exponent - e) -
                            CyclotomicElement::zeta_power(n, i_exponent + e);
  return value * CyclotomicElement(Rational(1, 2), n);
}

Rational cyclo_to_rational(const CyclotomicElement& a) {
  if (!a.is_rational()) {
    fail(ErrorCode::kNotRational, "cyclotomic element " + a.to_string() + " is not rational");
  }
  return a.coefficients().front();
}

}  // namespace theta_lab
