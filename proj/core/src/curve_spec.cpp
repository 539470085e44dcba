#include "theta_lab/curve_spec.hpp"

#include <cctype>
#include <charconv>
#include <sstream>
#include <vector>

#include "theta_lab/error.hpp"

namespace theta_lab {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  }
  return out;
}

[[noreturn]] void parse_error(const std::string& what, std::string_view text) {
  fail(ErrorCode::kParseError, what + ": '" + std::string(text) + "'");
}

/// Splits "key=value" pairs separated by ';'.
std::vector<std::pair<std::string, std::string>> key_values(std::string_view text) {
  std::vector<std::pair<std::string, std::string>> out;
  for (auto part : split(text, ';')) {
    if (part.empty()) continue;
    const auto eq = part.find('=');
    if (eq == std::string_view::npos) parse_error("expected key=value", part);
    out.emplace_back(std::string(trim(part.substr(0, eq))), std::string(trim(part.substr(eq + 1))));
  }
  return out;
}

}  // namespace

std::string CurveSpec::to_string() const {
  std::ostringstream os;
  os << "field=" << field.to_string() << "; f=";
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i > 0) os << ",";
    if (field.kind == BaseField::Kind::kPrime) {
      os << to_field(coeffs[i], Fp(field.characteristic, 0));
    } else {
      os << coeffs[i];
    }
  }
  return os.str();
}

CurveSpec parse_curve_spec(std::string_view text) {
  CurveSpec spec;
  bool have_field = false;
  bool have_f = false;
  for (const auto& [key, value] : key_values(text)) {
    if (key == "field") {
      if (value == "Q") {
        spec.field = BaseField::rationals();
      } else if (value.rfind("Fp:", 0) == 0) {
        std::uint64_t p = 0;
        const std::string digits = value.substr(3);
        const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
        if (ec != std::errc() || ptr != digits.data() + digits.size()) {
          parse_error("bad characteristic", value);
        }
        spec.field = BaseField::prime(p);
      } else {
        parse_error("field must be Q or Fp:<p>", value);
      }
      have_field = true;
    } else if (key == "f") {
      const auto parts = split(value, ',');
      if (parts.size() != 5) parse_error("f needs exactly five coefficients c0..c4", value);
      for (std::size_t i = 0; i < 5; ++i) spec.coeffs[i] = Rational::parse(parts[i]);
      have_f = true;
    } else {
      parse_error("unknown curve key", key);
    }
  }
  if (!have_field || !have_f) parse_error("curve spec needs field= and f=", text);
  return spec;
}

Fp to_field(const Rational& value, const Fp& like) {
  const std::uint64_t p = like.modulus();
  const BigInt pz(std::to_string(p));
  const auto residue = [&](const BigInt& n) {
    BigInt r = n % pz;
    if (r < 0) r += pz;
    return Fp(p, r.get_si());
  };
  return residue(value.numerator()) / residue(value.denominator());
}

Rational to_field(const Rational& value, const Rational& /*like*/) { return value; }

AnyCurve new_curve(const BaseField& field, const std::array<Rational, 6>& f_coeffs) {
  if (f_coeffs[5] != Rational(1)) {
    fail(ErrorCode::kInvalidArgument, "f must be monic of degree 5");
  }
  if (field.kind == BaseField::Kind::kRationals) {
    return HyperellipticCurve<Rational>(
        Polynomial<Rational>(std::vector<Rational>(f_coeffs.begin(), f_coeffs.end())));
  }
  const std::uint64_t p = field.characteristic;
  if (p == 2) fail(ErrorCode::kEvenCharacteristic, "characteristic 2 is not supported");
  if (!is_prime(p)) fail(ErrorCode::kNotPrime, std::to_string(p) + " is not prime");
  if (p >= (std::uint64_t{1} << 32)) fail(ErrorCode::kFieldTooLarge, "prime fields are limited to p < 2^32");
  const Fp like(p, 0);
  std::vector<Fp> coeffs;
  for (const auto& c : f_coeffs) coeffs.push_back(to_field(c, like));
  return HyperellipticCurve<Fp>(Polynomial<Fp>(std::move(coeffs)));
}

AnyCurve new_curve(const CurveSpec& spec) {
  std::array<Rational, 6> all;
  std::copy(spec.coeffs.begin(), spec.coeffs.end(), all.begin());
  all[5] = Rational(1);
  return new_curve(spec.field, all);
}

template <class T>
Polynomial<T> parse_polynomial(std::string_view text, const T& like) {
  const std::string s = strip_spaces(text);
  if (s.empty()) parse_error("empty polynomial", text);
  std::vector<T> coeffs;
  const auto add_term = [&](std::size_t power, const T& c) {
    if (coeffs.size() <= power) coeffs.resize(power + 1, zero_like(like));
    coeffs[power] += c;
  };
  std::size_t i = 0;
  while (i < s.size()) {
    bool negative = false;
    if (s[i] == '+' || s[i] == '-') {
      negative = s[i] == '-';
      ++i;
    } else if (i != 0) {
      parse_error("expected + or - between terms", text);
    }
    std::size_t j = i;
    while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '/')) ++j;
    const bool has_number = j > i;
    Rational c(1);
    if (has_number) c = Rational::parse(s.substr(i, j - i));
    i = j;
    std::size_t power = 0;
    if (i < s.size() && s[i] == '*') {
      ++i;
      if (i >= s.size() || s[i] != 'x') parse_error("expected x after *", text);
    }
    if (i < s.size() && s[i] == 'x') {
      ++i;
      power = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::size_t k = i;
        while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
        if (k == i) parse_error("expected exponent after ^", text);
        power = std::stoul(s.substr(i, k - i));
        i = k;
      }
    } else if (!has_number) {
      parse_error("malformed term", text);
    }
    if (power > 64) parse_error("exponent too large", text);
    const T value = to_field(negative ? -c : c, like);
    add_term(power, value);
  }
  return Polynomial<T>(std::move(coeffs));
}

template <class T>
PicClass<T> parse_class(const HyperellipticCurve<T>& curve, std::string_view text) {
  PicClass<T> out;
  bool have_u = false;
  bool have_v = false;
  for (const auto& [key, value] : key_values(text)) {
    if (key == "u") {
      out.base.u = parse_polynomial(value, curve.one());
      have_u = true;
    } else if (key == "v") {
      out.base.v = parse_polynomial(value, curve.one());
      have_v = true;
    } else if (key == "deg") {
      long d = 0;
      const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), d);
      if (ec != std::errc() || ptr != value.data() + value.size()) parse_error("bad degree", value);
      out.degree = d;
    } else {
      parse_error("unknown class key", key);
    }
  }
  if (!have_u || !have_v) parse_error("class needs u= and v=", text);
  curve.require_valid(out.base);
  return out;
}

template <class T>
CurvePoint<T> parse_point(const HyperellipticCurve<T>& curve, std::string_view text) {
  const std::string s = strip_spaces(text);
  if (s == "inf") return CurvePoint<T>::at_infinity();
  if (s.size() < 5 || s.front() != '(' || s.back() != ')') parse_error("expected (x, y) or inf", text);
  const auto parts = split(std::string_view(s).substr(1, s.size() - 2), ',');
  if (parts.size() != 2) parse_error("expected (x, y) or inf", text);
  const auto point = CurvePoint<T>::affine(to_field(Rational::parse(parts[0]), curve.one()),
                                           to_field(Rational::parse(parts[1]), curve.one()));
  if (!curve.contains(point)) fail(ErrorCode::kNotOnCurve, point.to_string() + " is not on the curve");
  return point;
}

template Polynomial<Fp> parse_polynomial(std::string_view, const Fp&);
template Polynomial<Rational> parse_polynomial(std::string_view, const Rational&);
template PicClass<Fp> parse_class(const HyperellipticCurve<Fp>&, std::string_view);
template PicClass<Rational> parse_class(const HyperellipticCurve<Rational>&, std::string_view);
template CurvePoint<Fp> parse_point(const HyperellipticCurve<Fp>&, std::string_view);
template CurvePoint<Rational> parse_point(const HyperellipticCurve<Rational>&, std::string_view);

}  // namespace theta_lab
