#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <sstream>

#include "lightsector/errors.hpp"
#include "lightsector/rational.hpp"

using lightsector::ParseError;
using lightsector::Rational;

TEST(Rational, ParsesCanonicalForms) {
  EXPECT_EQ(Rational::parse("0").str(), "0");
  EXPECT_EQ(Rational::parse("5").str(), "5");
  EXPECT_EQ(Rational::parse("-3/7").str(), "-3/7");
  EXPECT_EQ(Rational::parse("-3/7"), Rational(-3, 7));
}

TEST(Rational, CanonicalizesOnInput) {
  EXPECT_EQ(Rational::parse("2/4").str(), "1/2");
  EXPECT_EQ(Rational::parse("-6/3").str(), "-2");
  EXPECT_EQ(Rational::parse("0/9").str(), "0");
  EXPECT_EQ(Rational::parse("-0").str(), "0");
  EXPECT_EQ(Rational::parse("007").str(), "7");
}

TEST(Rational, RejectsMalformedText) {
  for (const char* bad : {"1/-2", "1/0", "", "-", "+1", "1/", "/2", "1.5", "a", "1 /2", " 1",
                          "1/2/3", "--1"})
    EXPECT_THROW(Rational::parse(bad), ParseError) << bad;
}

TEST(Rational, ArithmeticIsExact) {
  const Rational third(1, 3);
  EXPECT_EQ(third + third + third, Rational(1));
  EXPECT_EQ(Rational(1, 2) - Rational(1, 3), Rational(1, 6));
  EXPECT_EQ(Rational(2, 3) * Rational(9, 4), Rational(3, 2));
  EXPECT_EQ(Rational(2, 3) / Rational(4, 9), Rational(3, 2));
  EXPECT_EQ(-Rational(2, 5), Rational(-2, 5));
  EXPECT_THROW(Rational(1) / Rational(0), lightsector::Error);
  EXPECT_THROW(Rational(1, 0), lightsector::Error);
}

TEST(Rational, OrderingAndSign) {
  EXPECT_LT(Rational(-1, 2), Rational(1, 3));
  EXPECT_GT(Rational(2, 3), Rational(3, 5));
  EXPECT_EQ(Rational(-4, 6).sign(), -1);
  EXPECT_TRUE(Rational(0, 5).is_zero());
  EXPECT_EQ(Rational(3, -6), Rational(-1, 2));
}

TEST(Rational, StreamsCanonicalText) {
  std::ostringstream os;
  os << Rational(10, -4);
  EXPECT_EQ(os.str(), "-5/2");
}

// Lowest terms with positive denominator for arbitrary constructed values,
// and str/parse round trip.
TEST(RationalProperty, LowestTermsRoundTrip) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-1000, 1000), den(-60, 60);
  for (int trial = 0; trial < 2000; ++trial) {
    long d = den(rng);
    if (d == 0) d = 1;
    const long n = num(rng);
    const Rational q(n, d);
    const Rational back = Rational::parse(q.str());
    EXPECT_EQ(back, q);
    EXPECT_EQ(back.str(), q.str());
    const long dd = std::stol(q.denominator());
    const long nn = std::stol(q.numerator());
    EXPECT_GT(dd, 0);
    EXPECT_EQ(std::gcd(std::labs(nn), dd), 1);
    EXPECT_EQ(nn * d, n * dd);  // same value
  }
}
