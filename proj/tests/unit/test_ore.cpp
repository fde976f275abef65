#include <gtest/gtest.h>

#include <random>

#include "precint/errors.hpp"
#include "precint/ore.hpp"
#include "precint/parse.hpp"
#include "precint/verify.hpp"
#include "support.hpp"

namespace precint {
namespace {

RationalFunction rf(const std::string& s) { return parse_rational_function(s); }

TEST(Ore, CommutationRule) {
  const OreOperator s = OreOperator::shift(), x = OreOperator::scalar(rf("x"));
  EXPECT_EQ(ore_multiply(s, x), ore_multiply(OreOperator::scalar(rf("x + 1")), s));
  EXPECT_EQ(ore_multiply(OreOperator::shift(2), OreOperator::scalar(rf("1/x"))),
            ore_multiply(OreOperator::scalar(rf("1/(x+2)")), OreOperator::shift(2)));
}

TEST(Ore, MultiplicationIsAssociative) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const OreOperator a = random_operator({2, 2, 3, seed});
    const OreOperator b = random_operator({1, 1, 3, seed + 100});
    const OreOperator c = OreOperator(random_element(2, seed + 200).coords());
    EXPECT_EQ(ore_multiply(ore_multiply(a, b), c), ore_multiply(a, ore_multiply(b, c)));
  }
}

TEST(Ore, NormalizeKeepsTheLeftIdeal) {
  const OreOperator l({rf("(x+2)/3"), rf("0"), rf("x/(x+1)")});
  const OreOperator n = normalize(l);
  EXPECT_TRUE(n.has_polynomial_coeffs());
  // n = f * l for a single scalar f.
  const RationalFunction f = n.coeff(0) / l.coeff(0);
  EXPECT_EQ(l.left_scaled(f), n);
  EXPECT_EQ(n, OreOperator({rf("(x+1)*(x+2)"), rf("0"), rf("3*x")}));
}

TEST(Ore, NormalizeRemovesCommonContent) {
  const OreOperator n = normalize(OreOperator({rf("-2*x*(x-1)"), rf("4*x")}));
  EXPECT_EQ(n, OreOperator({rf("1 - x"), rf("2")}));
}

TEST(Ore, ReductionModuloOperator) {
  const OreOperator l = test::example_operator();
  // S^3 = -((x+2)^2 + x S^2)/(x+2) modulo L.
  const QuotientElement s3 = reduce_mod(OreOperator::shift(3), l);
  EXPECT_EQ(s3, QuotientElement({rf("-(x+2)"), rf("0"), rf("-x/(x+2)")}));
  // Multiples of L reduce to zero.
  const OreOperator m = ore_multiply(OreOperator({rf("x"), rf("1/(x-1)")}), l);
  EXPECT_TRUE(reduce_mod(m, l).is_zero());
}

TEST(Ore, ReductionIsLinearAndRespectsLowOrder) {
  const OreOperator l = test::example_operator();
  const OreOperator a = parse_operator("x*S + 1/(x+3)");
  EXPECT_EQ(reduce_mod(a, l).to_operator(), a);
  const OreOperator b = parse_operator("S^4 - x*S^3");
  EXPECT_EQ(reduce_mod(a + b, l), reduce_mod(a, l) + reduce_mod(b, l));
}

TEST(Ore, Printing) {
  EXPECT_EQ(to_string(test::example_operator()), "4 + 4*x + x^2 + x*S^2 + (2 + x)*S^3");
  EXPECT_EQ(to_string(parse_operator("(x-2)/x^2 + (1/x)*S")), "(-2 + x)/x^2 + (1/x)*S");
  EXPECT_EQ(to_string(parse_operator("-2/x + S^2")), "-2/x + S^2");
  EXPECT_EQ(to_string(parse_operator("1 - x*S")), "1 - x*S");
  EXPECT_EQ(to_string(OreOperator()), "0");
}

TEST(Ore, ShiftBy) { EXPECT_EQ(shift_by(rf("1/x"), 2), rf("1/(x+2)")); }

}  // namespace
}  // namespace precint
