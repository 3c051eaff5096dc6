#include <gtest/gtest.h>

#include <complex>

#include "holoroot/rational.hpp"

using holoroot::make_rational;
using holoroot::parse_rational;
using holoroot::Rational;

TEST(Rational, ParsesIntegersFractionsAndDecimals) {
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_EQ(parse_rational("-3/6"), make_rational(-1, 2));
  EXPECT_EQ(parse_rational(" 0.125 "), make_rational(1, 8));
  EXPECT_EQ(parse_rational("-0.01"), make_rational(-1, 100));
  EXPECT_EQ(parse_rational(".5"), make_rational(1, 2));
  EXPECT_EQ(parse_rational("2."), Rational(2));
  EXPECT_EQ(parse_rational("+4/8"), make_rational(1, 2));
}

TEST(Rational, DecimalsAreExact) {
  // 0.1 has no finite binary expansion.
  EXPECT_EQ(parse_rational("0.1") * 10, Rational(1));
}

TEST(Rational, RejectsMalformedInput) {
  for (const char* bad : {"", "abc", "1/0", "1/-2", "1.2.3", ".", "--1", "1e5", "3/"})
    EXPECT_THROW(parse_rational(bad), std::invalid_argument) << bad;
}

TEST(Rational, CanonicalForm) {
  const Rational q = make_rational(6, -4);
  EXPECT_EQ(q.get_num(), -3);
  EXPECT_EQ(q.get_den(), 2);
  EXPECT_EQ(holoroot::to_string(q), "-3/2");
  EXPECT_EQ(holoroot::to_string(make_rational(0, 5)), "0");
  EXPECT_THROW(make_rational(1, 0), std::invalid_argument);
}

TEST(Rational, FloatingConversion) {
  EXPECT_DOUBLE_EQ(holoroot::from_rational<double>(make_rational(1, 4)), 0.25);
  EXPECT_EQ(holoroot::from_rational<std::complex<double>>(make_rational(-3, 2)),
            std::complex<double>(-1.5, 0));
  EXPECT_NEAR(static_cast<double>(holoroot::from_rational<long double>(make_rational(1, 3))),
              1.0 / 3, 1e-16);
}
