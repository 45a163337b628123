#include <affico/field_parser.hpp>

#include <gtest/gtest.h>

using namespace affico;

namespace {

GoldenNumber tau() { return GoldenNumber::tau(); }

std::size_t error_position(const std::string& s) {
  try {
    parse_field_expr(s);
  } catch (const ParseError& e) {
    return e.position();
  }
  ADD_FAILURE() << "no error for '" << s << "'";
  return 0;
}

}  // namespace

TEST(FieldParser, Literals) {
  EXPECT_EQ(parse_field_expr("(7+tau)/5"), GoldenNumber(Rational(7, 5), Rational(1, 5)));
  EXPECT_EQ(parse_field_expr("tau^2"), tau() + 1);
  EXPECT_EQ(parse_field_expr("tau^-2"), 2 - tau());
  EXPECT_EQ(parse_field_expr("2*tau"), 2 * tau());
  EXPECT_EQ(parse_field_expr(" 1 / 2 "), GoldenNumber(Rational(1, 2)));
  EXPECT_EQ(parse_field_expr("tau-1"), tau() - 1);
}

TEST(FieldParser, UnaryMinusBindsLooserThanPower) {
  EXPECT_EQ(parse_field_expr("-tau^2"), -(tau() + 1));
  EXPECT_EQ(parse_field_expr("(-tau)^2"), tau() + 1);
  EXPECT_EQ(parse_field_expr("2-3-4"), GoldenNumber(-5));
  EXPECT_EQ(parse_field_expr("12/2/3"), GoldenNumber(2));
}

TEST(FieldParser, FormatRoundTrip) {
  for (const char* s : {"0", "tau", "-tau", "7/5+1/5*tau", "-3/4-2/9*tau", "5"}) {
    EXPECT_EQ(format(parse_field_expr(s)), s);
  }
}

TEST(FieldParser, Errors) {
  EXPECT_THROW(parse_field_expr("taau"), ParseError);
  EXPECT_THROW(parse_field_expr(""), ParseError);
  EXPECT_THROW(parse_field_expr("sqrt(5)"), ParseError);
  EXPECT_EQ(error_position("(1/"), 3U);
  EXPECT_EQ(error_position("1+*2"), 2U);
  EXPECT_EQ(error_position("1 2"), 2U);
  EXPECT_EQ(error_position("1/0"), 2U);  // division by zero is reported at the divisor
}

TEST(FieldParser, ExtensionMode) {
  const auto k = Radicand::three();
  EXPECT_EQ(parse_ext_expr("sqrt(3)/2", k), ExtNumber(GoldenNumber(0), GoldenNumber(Rational(1, 2)), k));
  EXPECT_EQ(parse_ext_expr("tau", k), ExtNumber(tau(), k));
  EXPECT_THROW(parse_ext_expr("sqrt(2)", k), ParseError);
}

TEST(FieldParser, Triples) {
  const auto c = parse_triple("0,1,tau", Radicand::unit());
  EXPECT_EQ(c[2], ExtNumber(tau(), Radicand::unit()));
  EXPECT_THROW(parse_triple("0,1", Radicand::unit()), ParseError);
  EXPECT_THROW(parse_triple("0,1,2,3", Radicand::unit()), ParseError);
  try {
    parse_triple("0,1,ta", Radicand::unit());
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_GE(e.position(), 4U);
  }
}
