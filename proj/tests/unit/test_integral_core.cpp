#include <gtest/gtest.h>

#include <cstdlib>

#include "precint/errors.hpp"
#include "precint/integral_basis.hpp"
#include "precint/parse.hpp"
#include "precint/shift_space.hpp"
#include "precint/toy_space.hpp"
#include "precint/verify.hpp"
#include "support.hpp"

namespace precint {
namespace {

using test::at;

QuotientElement el(const std::vector<std::string>& coords) {
  std::vector<RationalFunction> c;
  for (const auto& s : coords) c.push_back(parse_rational_function(s));
  return QuotientElement(std::move(c));
}

AlgebraicPoint sqrt2(long offset = 0) { return AlgebraicPoint(parse_rational_function("x^2 - 2").num(), offset); }

TEST(ToySpace, ValueIsWeightedMinimum) {
  ToySpace t({2, -1});
  EXPECT_EQ(t.val(el({"x", "1/x"}), at(0)), ExtInt(-2));
  EXPECT_EQ(t.val(el({"1/x^2", "x"}), at(0)), ExtInt(0));
  EXPECT_EQ(t.val(el({"0", "0"}), at(0)), ExtInt::infinity());
}

TEST(ToySpace, ZeroWeightsLeaveBasisUnchanged) {
  ToySpace t({0, 0, 0});
  const auto res = local_integral_basis(t, BasisMatrix::standard(3), at(0));
  EXPECT_EQ(res.basis, BasisMatrix::standard(3));
  EXPECT_EQ(res.updates, 0u);
}

TEST(ToySpace, NormalizationAloneSuffices) {
  ToySpace t({2, -1});
  const auto res = local_integral_basis(t, BasisMatrix::standard(2), at(0));
  EXPECT_EQ(res.basis.rows[0], el({"1/x^2", "0"}));
  EXPECT_EQ(res.basis.rows[1], el({"0", "x"}));
  EXPECT_EQ(res.updates, 0u);
  EXPECT_EQ(res.initial_disc, 0);
}

TEST(ToySpace, NoAlphaForCoordinateBasis) {
  ToySpace t({1, -3, 0});
  const BasisMatrix b = local_integral_basis(t, BasisMatrix::standard(3), at(1)).basis;
  for (std::size_t d = 1; d < 3; ++d) {
    EXPECT_EQ(t.find_alpha(std::span(b.rows.data(), d), b.rows[d], at(1)), std::nullopt);
  }
}

TEST(ToySpace, CancellationUpdateAtRationalPoint) {
  // B_2 = e_1 + x e_2 has value 0 at 0, but B_2 - B_1 = x e_2 has value 1.
  ToySpace t({0, 0});
  BasisMatrix b{{el({"1", "0"}), el({"1", "x"})}, {}};
  const auto alpha = t.find_alpha(std::span(b.rows.data(), 1), b.rows[1], at(0));
  ASSERT_TRUE(alpha);
  EXPECT_EQ((*alpha)[0], NFElem(-1));
  const auto res = local_integral_basis(t, b, at(0));
  EXPECT_EQ(res.basis.rows[1], el({"0", "1"}));
  EXPECT_EQ(res.updates, 1u);
  ASSERT_EQ(res.steps.size(), 1u);
  EXPECT_EQ(*res.steps[0].before - *res.steps[0].after, 1);
}

TEST(ToySpace, GaloisDescentUpdateAtAlgebraicPoint) {
  // alpha = -1 at sqrt(2); the descended update divides by x^2 - 2 and
  // multiplies by the trace sum 2x, staying over Q(x).
  ToySpace t({0, 0});
  BasisMatrix b{{el({"1", "0"}), el({"1", "x^2 - 2"})}, {}};
  const auto res = local_integral_basis(t, b, sqrt2());
  EXPECT_EQ(res.basis.rows[1], el({"0", "2*x"}));
  EXPECT_EQ(res.initial_disc, 1);
  EXPECT_EQ(res.final_disc, 0);
  EXPECT_TRUE(module_equal_at(res.basis, BasisMatrix::standard(2), sqrt2()));
}

TEST(ToySpace, DuplicateDirectionIsRejected) {
  ToySpace t({0, 0});
  const std::vector<QuotientElement> prefix{el({"1", "0"})};
  EXPECT_THROW(t.find_alpha(prefix, el({"1", "0"}), at(0)), PreconditionError);
}

TEST(ToySpace, ValueFunctionAxioms) {
  ToySpace t({1, -2, 0});
  for (std::uint64_t s = 0; s < 20; ++s) {
    const QuotientElement a = random_element(3, s), b = random_element(3, s + 1000);
    for (long n : {-1L, 0L, 2L}) {
      const RationalFunction f = parse_rational_function("(x - " + std::to_string(n) + ")^3/(x + 9)");
      EXPECT_EQ(t.val(a.scaled(f), at(n)), t.val(a, at(n)) + ExtInt(3));
      EXPECT_GE(t.val(a + b, at(n)), min(t.val(a, at(n)), t.val(b, at(n))));
    }
  }
}

class ExampleSpace : public ::testing::Test {
 protected:
  ShiftSpace space{test::example_operator()};
};

TEST_F(ExampleSpace, LocalBasisAtZero) {
  const auto res = local_integral_basis(space, BasisMatrix::standard(3), at(0));
  EXPECT_TRUE(module_equal_at(res.basis, test::example_local_basis(), at(0)));
  EXPECT_EQ(res.updates, 3u);
  EXPECT_EQ(res.initial_disc, 3);
  EXPECT_EQ(res.final_disc, 0);
  for (const auto& step : res.steps) EXPECT_EQ(*step.before - *step.after, 1);
}

TEST_F(ExampleSpace, FindAlphaOnNormalizedSecondElement) {
  const std::vector<QuotientElement> prefix{QuotientElement::basis_vector(3, 0)};
  const auto alpha = space.find_alpha(prefix, parse_element("x*S", 3), at(0));
  ASSERT_TRUE(alpha);
  EXPECT_EQ((*alpha)[0], NFElem(-2));
  EXPECT_THROW(space.find_alpha(prefix, parse_element("1", 3), at(0)), PreconditionError);
  EXPECT_THROW(space.find_alpha(prefix, parse_element("S", 3), at(0)), PreconditionError);
}

TEST_F(ExampleSpace, Discriminant) {
  EXPECT_EQ(space.discriminant(BasisMatrix::standard(3).rows, at(0)), 1);
  BasisMatrix scaled = BasisMatrix::standard(3);
  scaled.rows[1] = scaled.rows[1].scaled(parse_rational_function("x"));
  EXPECT_EQ(space.discriminant(scaled.rows, at(0)), 2);
  EXPECT_EQ(space.discriminant(test::example_local_basis().rows, at(0)), 0);
  EXPECT_EQ(discriminant(test::example_operator(), BasisMatrix::standard(3), at(0)), 1);
}

TEST_F(ExampleSpace, RerunPerformsNoUpdates) {
  const auto first = local_integral_basis(space, BasisMatrix::standard(3), at(0));
  const auto again = local_integral_basis(space, first.basis, at(0));
  EXPECT_EQ(again.updates, 0u);
  EXPECT_EQ(again.basis, first.basis);
}

TEST_F(ExampleSpace, IterationCap) {
  LocalOptions o;
  o.max_iterations = 1;
  EXPECT_THROW(local_integral_basis(space, BasisMatrix::standard(3), at(0), o), InternalError);
  ::setenv("PRECINT_MAX_ITER", "2", 1);
  EXPECT_THROW(local_integral_basis(space, BasisMatrix::standard(3), at(0)), InternalError);
  ::setenv("PRECINT_MAX_ITER", "3", 1);
  EXPECT_NO_THROW(local_integral_basis(space, BasisMatrix::standard(3), at(0)));
  ::unsetenv("PRECINT_MAX_ITER");
}

TEST(GlobalBasis, Example) {
  ZSpec z;
  z.right_bounds["Z"] = 0;
  const GlobalResult res = global_integral_basis(test::example_operator(), z);
  ASSERT_EQ(res.runs.size(), 3u);
  for (long n : {-2L, -1L, 0L}) EXPECT_TRUE(module_equal_at(res.basis, test::example_global_basis(), at(n)));
  // Later points never spoil earlier ones.
  ShiftSpace space(test::example_operator());
  for (const auto& run : res.runs)
    for (const auto& row : res.basis.rows) EXPECT_GE(space.val(row, run.point), ExtInt(0));
}

TEST(GlobalBasis, MissingBoundPropagates) {
  EXPECT_THROW(global_integral_basis(test::example_operator(), ZSpec{}), MissingRightBound);
}

TEST(GlobalBasis, EmptyWorklistKeepsStandardBasis) {
  const GlobalResult res = global_integral_basis(parse_operator("S^2 - 1"), ZSpec{});
  EXPECT_EQ(res.basis, BasisMatrix::standard(2));
  EXPECT_TRUE(res.runs.empty());
}

TEST(GlobalBasis, AlgebraicOrbit) {
  ZSpec z;
  z.right_bounds["-2 + x^2"] = 1;
  const OreOperator l = parse_operator("x^2 - 2 + S^2");
  const GlobalResult res = global_integral_basis(l, z);
  ASSERT_EQ(res.runs.size(), 2u);
  for (const auto& run : res.runs) {
    EXPECT_TRUE(certificate(l, res.basis, run.point, 50, 3).clean());
  }
  EXPECT_TRUE(certificate(l, res.basis, sqrt2(0), 50, 4).clean());
}

}  // namespace
}  // namespace precint
