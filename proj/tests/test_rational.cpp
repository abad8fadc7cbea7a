#include <gtest/gtest.h>

#include <cstdint>
#include <random>

#include "tlab/rational.hpp"
#include "tlab/simplex.hpp"

using namespace tlab;

TEST(ParseRational, Forms) {
  EXPECT_EQ(parse_rational("1/2"), Rational(1, 2));
  EXPECT_EQ(parse_rational("-3/6"), Rational(-1, 2));
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_EQ(parse_rational("+4/8"), Rational(1, 2));
  EXPECT_THROW(parse_rational("1/0"), InvalidInput);
  EXPECT_THROW(parse_rational("1/-2"), InvalidInput);
  EXPECT_THROW(parse_rational("0.5"), InvalidInput);
  EXPECT_THROW(parse_rational(""), InvalidInput);
}

TEST(ParseRational, CanonicalText) {
  EXPECT_EQ(to_string(Rational(6, 4)), "3/2");
  EXPECT_EQ(to_string(Rational(4, 2)), "2");
  EXPECT_EQ(to_string(Rational(-1, 3)), "-1/3");
}

TEST(FloorCeil, Signs) {
  EXPECT_EQ(floor_div(Rational(7, 2)), 3);
  EXPECT_EQ(floor_div(Rational(-7, 2)), -4);
  EXPECT_EQ(ceil_div(Rational(7, 2)), 4);
  EXPECT_EQ(ceil_div(Rational(-7, 2)), -3);
  EXPECT_EQ(ceil_div(Rational(4)), 4);
}

TEST(SmallRational, AgreesWithRationalOnRandomOps) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> num(-50, 50), den(1, 40);
  for (int i = 0; i < 20000; ++i) {
    const SmallRational a(num(rng), den(rng)), b(num(rng), den(rng));
    const Rational ra = a.to_rational(), rb = b.to_rational();
    EXPECT_EQ((a + b).to_rational(), ra + rb);
    EXPECT_EQ((a - b).to_rational(), ra - rb);
    EXPECT_EQ((a * b).to_rational(), ra * rb);
    if (rb != 0) {
      EXPECT_EQ((a / b).to_rational(), ra / rb);
    }
    EXPECT_EQ(a < b, ra < rb);
    EXPECT_EQ(a == b, ra == rb);
  }
}

TEST(SmallRational, OverflowIsReported) {
  const SmallRational big(INT64_MAX / 2 + 1);
  EXPECT_THROW(big + big, RationalOverflow);
  EXPECT_THROW(big * SmallRational(3), RationalOverflow);
  EXPECT_THROW(SmallRational(1, 0), InvalidInput);
  const auto q = with_exact_field([]<class F>() { return F(INT64_MAX / 2 + 1) * F(4); });
  EXPECT_EQ(q, Rational(INT64_MAX / 2 + 1) * 4);
}

TEST(SmallRational, FromRational) {
  EXPECT_EQ(SmallRational::from_rational(Rational(-6, 4)).to_rational(), Rational(-3, 2));
  EXPECT_THROW(SmallRational::from_rational(Rational(INT64_MAX) * 2), RationalOverflow);
}

TEST(Simplex, TextbookProblem) {
  // max 3x + 5y s.t. x <= 4, 2y <= 12, 3x + 2y <= 18: optimum 36 at (2, 6).
  const std::vector<std::vector<Rational>> a = {{1, 0}, {0, 2}, {3, 2}};
  const auto sol = lp::maximize<Rational>(a, {4, 12, 18}, {3, 5});
  EXPECT_EQ(sol.status, lp::Status::optimal);
  EXPECT_EQ(sol.objective, 36);
  EXPECT_EQ(sol.x, (std::vector<Rational>{2, 6}));
}

TEST(Simplex, Unbounded) {
  const std::vector<std::vector<Rational>> a = {{1, -1}};
  EXPECT_EQ(lp::maximize<Rational>(a, {1}, {1, 1}).status, lp::Status::unbounded);
}

TEST(Simplex, DegenerateDoesNotCycle) {
  // A standard cycling example for the largest-coefficient rule; the
  // optimum is 1 at (1, 0, 1, 0).
  const std::vector<std::vector<Rational>> a = {{Rational(1, 2), Rational(-11, 2), Rational(-5, 2), 9},
                                                {Rational(1, 2), Rational(-3, 2), Rational(-1, 2), 1},
                                                {1, 0, 0, 0}};
  const auto sol = lp::maximize<Rational>(a, {0, 0, 1}, {10, -57, -9, -24});
  EXPECT_EQ(sol.status, lp::Status::optimal);
  EXPECT_EQ(sol.objective, 1);
  EXPECT_EQ(sol.x, (std::vector<Rational>{1, 0, 1, 0}));
}

TEST(Simplex, RejectsNegativeRhs) {
  const std::vector<std::vector<Rational>> a = {{1}};
  EXPECT_THROW(lp::maximize<Rational>(a, {-1}, {1}), InvalidInput);
}
