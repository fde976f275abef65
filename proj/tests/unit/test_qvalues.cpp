#include <gtest/gtest.h>

#include "precint/parse.hpp"
#include "precint/qvalues.hpp"
#include "support.hpp"

namespace precint {
namespace {

using test::qr;

TEST(QValues, ValuationOfQuotients) {
  EXPECT_EQ(nu_q(qr("2 - x", "x")), ExtInt(-1));
  EXPECT_EQ(nu_q(qr("x^2 - x", "1 + x")), ExtInt(1));
  EXPECT_EQ(nu_q(qr("0")), ExtInt::infinity());
  EXPECT_EQ(nu_q(qr("5")), ExtInt(0));
}

TEST(QValues, ExpansionOfGeometricSeries) {
  const QExpansion e = q_expand(qr("1", "1 - x"), 6);
  EXPECT_EQ(e.valuation, 0);
  for (long n = 0; n <= 6; ++n) EXPECT_EQ(e.coeff(n), NFElem(1));
  EXPECT_EQ(e.coeff(-1), NFElem(0));
}

TEST(QValues, CoefficientsOfLaurentSeries) {
  // (2 - 3q + q^2)/(q + q^2) = 2/q - 5 + 6q - 6q^2 + ...
  const QRational f = qr("2 - 3*x + x^2", "x + x^2");
  EXPECT_EQ(q_coefficient(f, -1), NFElem(2));
  EXPECT_EQ(q_coefficient(f, 0), NFElem(-5));
  EXPECT_EQ(q_coefficient(f, 1), NFElem(6));
  EXPECT_EQ(q_coefficient(f, 2), NFElem(-6));
  EXPECT_EQ(q_coefficient(f, -2), NFElem(0));
}

TEST(QValues, ExpansionTimesDenominatorRecoversNumerator) {
  const QRational f = qr("3 + x - 4*x^3", "1 + 2*x + 7*x^2");
  const QExpansion e = q_expand(f, 10);
  // Truncated product of series with the denominator reproduces the numerator.
  const std::vector<long> den{1, 2, 7};
  for (long n = 0; n <= 10; ++n) {
    NFElem s;
    for (long k = 0; k <= 2 && k <= n; ++k) s += NFElem(den[static_cast<std::size_t>(k)]) * e.coeff(n - k);
    const NFElem expect = n == 0 ? NFElem(3) : n == 1 ? NFElem(1) : n == 3 ? NFElem(-4) : NFElem(0);
    EXPECT_EQ(s, expect) << "n = " << n;
  }
}

TEST(QValues, EvaluationAtShiftedPoint) {
  const RationalFunction f = parse_rational_function("(x - 1)/x^2");
  EXPECT_EQ(eval_shifted(f, NFElem(1)), qr("x", "1 + 2*x + x^2"));
  EXPECT_EQ(nu_q(eval_shifted(f, NFElem(0))), ExtInt(-2));
}

TEST(QValues, EvaluationAtAlgebraicPoint) {
  const AlgebraicPoint z(parse_rational_function("x^2 - 2").num(), 0);
  const RationalFunction f = parse_rational_function("(x^2 - 2)^2 / (x + 1)");
  EXPECT_EQ(nu_q(eval_shifted(f, z.value())), ExtInt(2));
}

TEST(QValues, Printing) {
  EXPECT_EQ(to_string(qr("2 - 3*x + x^2", "x + x^2")), "(2 - 3*q + q^2)/(q + q^2)");
  EXPECT_EQ(to_string(qr("-x")), "-q");
}

}  // namespace
}  // namespace precint
