#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace theta_lab {

/// Element of F_p for an odd prime p < 2^32. The modulus travels with the value so
/// polynomials and divisors need no separate field context.
class Fp {
 public:
  Fp() = default;
  Fp(std::uint64_t modulus, std::int64_t value);

  std::uint64_t modulus() const { return modulus_; }
  std::uint64_t value() const { return value_; }

  bool is_zero() const { return value_ == 0; }
  Fp inverse() const;
  Fp pow(std::uint64_t exponent) const;
  /// Legendre-symbol test; zero counts as a square.
  bool is_square() const;
  /// Some square root (Tonelli-Shanks), or nullopt for non-residues.
  std::optional<Fp> sqrt() const;

  std::string to_string() const { return std::to_string(value_); }

  Fp& operator+=(const Fp& rhs);
  Fp& operator-=(const Fp& rhs);
  Fp& operator*=(const Fp& rhs);
  Fp& operator/=(const Fp& rhs) { return *this *= rhs.inverse(); }

  friend Fp operator+(Fp lhs, const Fp& rhs) { return lhs += rhs; }
  friend Fp operator-(Fp lhs, const Fp& rhs) { return lhs -= rhs; }
  friend Fp operator*(Fp lhs, const Fp& rhs) { return lhs *= rhs; }
  friend Fp operator/(Fp lhs, const Fp& rhs) { return lhs /= rhs; }
  Fp operator-() const { return Fp(modulus_, value_ == 0 ? 0 : modulus_ - value_, Raw{}); }

  friend bool operator==(const Fp& lhs, const Fp& rhs) {
    return lhs.value_ == rhs.value_ && lhs.modulus_ == rhs.modulus_;
  }

 private:
  struct Raw {};
  Fp(std::uint64_t modulus, std::uint64_t value, Raw) : modulus_(modulus), value_(value) {}

  std::uint64_t modulus_ = 0;
  std::uint64_t value_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Fp& value);

bool is_prime(std::uint64_t n);

}  // namespace theta_lab
