#include <gtest/gtest.h>

#include "support.hpp"

using namespace pbw;
using pbw::test::P;

TEST(Scalars, InverseCancels) {
  Scalar q = P("q");
  EXPECT_EQ(q * q.inverse(), Scalar(1));
  EXPECT_EQ(q / q, Scalar(1));
}

TEST(Scalars, QuotientMultipliesBack) {
  Scalar q = P("q");
  Scalar quo = (Scalar(1) - q * q) / (Scalar(1) - q);
  EXPECT_EQ(quo * (Scalar(1) - q), Scalar(1) - q * q);
  EXPECT_EQ(quo, Scalar(1) + q);
  EXPECT_TRUE(quo.den().is_one());
}

TEST(Scalars, SelfSubtractionIsZero) {
  Scalar s = Scalar(1) - P("q");
  EXPECT_TRUE((s - s).is_zero());
  EXPECT_EQ(s - s, Scalar());
}

TEST(Scalars, Powers) {
  Scalar q = P("q");
  EXPECT_EQ(q.pow(3), q * q * q);
  EXPECT_EQ((Scalar(1) + q).pow(0), Scalar(1));
  EXPECT_EQ(q.pow(-2) * q * q, Scalar(1));
  EXPECT_THROW(Scalar().pow(-1), DivisionByZero);
  EXPECT_THROW(Scalar(1) / Scalar(), DivisionByZero);
}

TEST(Scalars, UnitCheck) {
  Scalar q = P("q");
  EXPECT_FALSE(unit_check(Scalar(1) - q * q.inverse()));
  EXPECT_TRUE(unit_check(Scalar(1) - P("t1") * P("t2")));
  EXPECT_FALSE(unit_check(Scalar()));
}

TEST(Scalars, CanonicalFormSharesDenominator) {
  Scalar q = P("q"), t = P("t");
  Scalar a = (q * q - Scalar(1)) / (Scalar(2) * q - Scalar(2));
  EXPECT_EQ(a, (q + Scalar(1)) / Scalar(2));
  Scalar b = Scalar(1) / (Scalar(3) * q * t);
  EXPECT_EQ(b.den().leading().coeff, 1);
  EXPECT_EQ(canonicalize(b), b);
}

TEST(Scalars, TextRoundTrip) {
  std::vector<std::string> params{"q", "t"};
  for (const char* src : {"(1-q^2)/(1-q)", "q^-2", "-3/4*q*t", "(q+t)/(q-t)", "1/(2*q)"}) {
    Scalar s = parse_scalar(src, params);
    EXPECT_EQ(parse_scalar(s.to_string(), params), s) << src;
  }
}

namespace {

Scalar sample(std::mt19937_64& rng) { return random_scalar(rng, {"a", "b", "c"}); }

}  // namespace

TEST(ScalarProperties, FieldAxioms) {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 60; ++k) {
    Scalar a = sample(rng), b = sample(rng), c = sample(rng);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a - a, Scalar());
    if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), Scalar(1));
    if (!b.is_zero()) EXPECT_EQ((a / b) * b, a);
  }
}

TEST(ScalarProperties, CanonicalizeIdempotent) {
  std::mt19937_64 rng(12);
  for (int k = 0; k < 60; ++k) {
    Scalar s = sample(rng) / sample(rng);
    Scalar once = canonicalize(s);
    EXPECT_EQ(canonicalize(once), once);
    EXPECT_EQ(once, s);
  }
}

TEST(ScalarProperties, GenericIndependence) {
  Scalar t[3] = {P("t1"), P("t2"), P("t3")};
  int checked = 0;
  for (int a = -6; a <= 6; ++a)
    for (int b = -6; b <= 6; ++b)
      for (int c = -6; c <= 6; ++c) {
        if (std::abs(a) + std::abs(b) + std::abs(c) > 6 || (a == 0 && b == 0 && c == 0)) continue;
        EXPECT_TRUE(unit_check(Scalar(1) - t[0].pow(a) * t[1].pow(b) * t[2].pow(c)));
        ++checked;
      }
  EXPECT_GT(checked, 300);
}
