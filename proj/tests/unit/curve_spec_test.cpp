#include <gtest/gtest.h>

#include "theta_lab/curve_spec.hpp"
#include "theta_lab/error.hpp"

namespace theta_lab {
namespace {

ErrorCode code_of(const std::function<void()>& action) {
  try {
    action();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::kInvalidArgument;
}

TEST(CurveSpec, ParseAndCanonicalText) {
  const auto spec = parse_curve_spec("field=Fp:13; f=0,-1,0,0,0");
  EXPECT_EQ(spec.field, BaseField::prime(13));
  EXPECT_EQ(spec.coeffs[1], Rational(-1));
  EXPECT_EQ(spec.to_string(), "field=Fp:13; f=0,12,0,0,0");
  EXPECT_EQ(parse_curve_spec(" f=1,0,0,0,0 ; field=Q ").to_string(), "field=Q; f=1,0,0,0,0");
}

TEST(CurveSpec, ParseErrors) {
  for (const char* bad : {"field=Q", "f=1,2,3,4,5", "field=R; f=1,0,0,0,0", "field=Fp:x; f=1,0,0,0,0",
                          "field=Q; f=1,2,3", "field=Q; f=1,0,0,0,0; g=1", "field=Q f=1"}) {
    EXPECT_EQ(code_of([&] { parse_curve_spec(bad); }), ErrorCode::kParseError) << bad;
  }
}

TEST(CurveSpec, NewCurveValidation) {
  EXPECT_EQ(code_of([] { new_curve(parse_curve_spec("field=Fp:2; f=1,0,0,0,0")); }),
            ErrorCode::kEvenCharacteristic);
  EXPECT_EQ(code_of([] { new_curve(parse_curve_spec("field=Fp:15; f=1,0,0,0,0")); }),
            ErrorCode::kNotPrime);
  // x^5 has a repeated root.
  EXPECT_EQ(code_of([] { new_curve(parse_curve_spec("field=Q; f=0,0,0,0,0")); }),
            ErrorCode::kNotSquarefree);
  // x^5 - x^2 = x^2 (x^3 - 1)
  EXPECT_EQ(code_of([] { new_curve(parse_curve_spec("field=Fp:7; f=0,0,-1,0,0")); }),
            ErrorCode::kNotSquarefree);
  EXPECT_EQ(code_of([] {
              new_curve(BaseField::rationals(), {Rational(1), Rational(0), Rational(0), Rational(0),
                                                 Rational(0), Rational(2)});
            }),
            ErrorCode::kInvalidArgument);
  EXPECT_TRUE(std::holds_alternative<HyperellipticCurve<Rational>>(
      new_curve(parse_curve_spec("field=Q; f=1,1,0,0,0"))));
}

TEST(CurveSpec, ToFieldReducesFractions) {
  const Fp like(13, 0);
  EXPECT_EQ(to_field(Rational(1, 2), like), Fp(13, 7));
  EXPECT_EQ(to_field(Rational(-1), like), Fp(13, 12));
  EXPECT_THROW(to_field(Rational(1, 13), like), Error);
}

TEST(ParsePolynomial, AcceptedForms) {
  const Rational q;
  EXPECT_EQ(parse_polynomial("x^2 + 3*x - 1/2", q).to_string(), "x^2 + 3*x - 1/2");
  EXPECT_EQ(parse_polynomial("2x", q).to_string(), "2*x");
  EXPECT_EQ(parse_polynomial("-x^3", q).to_string(), "-x^3");
  EXPECT_EQ(parse_polynomial("0", q).to_string(), "0");
  EXPECT_EQ(parse_polynomial("x + x", q).to_string(), "2*x");
  EXPECT_EQ(parse_polynomial("x - 1", Fp(13, 0)).to_string(), "x + 12");
  EXPECT_THROW(parse_polynomial("x^", q), Error);
  EXPECT_THROW(parse_polynomial("y + 1", q), Error);
  EXPECT_THROW(parse_polynomial("", q), Error);
}

class SampleCurve : public ::testing::Test {
 protected:
  HyperellipticCurve<Fp> curve =
      std::get<HyperellipticCurve<Fp>>(new_curve(parse_curve_spec("field=Fp:13; f=0,-1,0,0,0")));
};

TEST_F(SampleCurve, ParsePoint) {
  const auto p = parse_point(curve, "(2, 2)");
  EXPECT_EQ(p, CurvePoint<Fp>::affine(Fp(13, 2), Fp(13, 2)));
  EXPECT_TRUE(parse_point(curve, "inf").infinity);
  EXPECT_EQ(code_of([&] { parse_point(curve, "(2, 3)"); }), ErrorCode::kNotOnCurve);
  EXPECT_EQ(code_of([&] { parse_point(curve, "(2 2)"); }), ErrorCode::kParseError);
}

TEST_F(SampleCurve, ParseClassRoundTrip) {
  const auto c = parse_class(curve, "u=x - 2; v=2; deg=1");
  EXPECT_EQ(c.degree, 1);
  EXPECT_EQ(c.to_string(), "u=x + 11; v=2; deg=1");
  EXPECT_EQ(parse_class(curve, c.to_string()), c);
  EXPECT_EQ(parse_class(curve, "u=1; v=0").degree, 0);
  EXPECT_EQ(code_of([&] { parse_class(curve, "u=x - 2; v=3"); }), ErrorCode::kInvalidDivisor);
  EXPECT_EQ(code_of([&] { parse_class(curve, "u=x - 2"); }), ErrorCode::kParseError);
}

}  // namespace
}  // namespace theta_lab
