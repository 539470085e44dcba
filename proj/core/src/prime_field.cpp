#include "theta_lab/prime_field.hpp"

#include <cassert>
#include <ostream>

#include "theta_lab/error.hpp"

namespace theta_lab {

Fp::Fp(std::uint64_t modulus, std::int64_t value) : modulus_(modulus) {
  assert(modulus >= 2);
  const auto m = static_cast<std::int64_t>(modulus);
  std::int64_t r = value % m;
  if (r < 0) r += m;
  value_ = static_cast<std::uint64_t>(r);
}

Fp& Fp::operator+=(const Fp& rhs) {
  assert(modulus_ == rhs.modulus_);
  value_ += rhs.value_;
  if (value_ >= modulus_) value_ -= modulus_;
  return *this;
}

Fp& Fp::operator-=(const Fp& rhs) {
  assert(modulus_ == rhs.modulus_);
  value_ = value_ >= rhs.value_ ? value_ - rhs.value_ : value_ + modulus_ - rhs.value_;
  return *this;
}

Fp& Fp::operator*=(const Fp& rhs) {
  assert(modulus_ == rhs.modulus_);
  value_ = (value_ * rhs.value_) % modulus_;
  return *this;
}

Fp Fp::pow(std::uint64_t exponent) const {
  Fp base = *this;
  Fp result(modulus_, 1, Raw{});
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    base *= base;
    exponent >>= 1U;
  }
  return result;
}

Fp Fp::inverse() const {
  if (is_zero()) {
    fail(ErrorCode::kDivisionByZero, "inverse of zero in F_" + std::to_string(modulus_));
  }
  return pow(modulus_ - 2);
}

bool Fp::is_square() const {
  return is_zero() || pow((modulus_ - 1) / 2).value_ == 1;
}

std::optional<Fp> Fp::sqrt() const {
  if (is_zero()) return *this;
  if (!is_square()) return std::nullopt;
  // Tonelli-Shanks with p - 1 = q * 2^s, q odd.
  std::uint64_t q = modulus_ - 1;
  unsigned s = 0;
  while ((q & 1U) == 0) {
    q >>= 1U;
    ++s;
  }
  Fp z(modulus_, 2, Raw{});
  while (z.is_square()) z += Fp(modulus_, 1, Raw{});
  Fp c = z.pow(q);
  Fp t = pow(q);
  Fp r = pow((q + 1) / 2);
  unsigned m = s;
  while (t.value_ != 1) {
    unsigned i = 0;
    Fp t2 = t;
    while (t2.value_ != 1) {
      t2 *= t2;
      ++i;
    }
    Fp b = c;
    for (unsigned j = 0; j + i + 1 < m; ++j) b *= b;
    m = i;
    c = b * b;
    t *= c;
    r *= b;
  }
  return r;
}

std::ostream& operator<<(std::ostream& os, const Fp& value) { return os << value.value(); }

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace theta_lab
