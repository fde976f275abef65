#include <gtest/gtest.h>

#include "precint/errors.hpp"
#include "precint/parse.hpp"
#include "precint/shift_space.hpp"
#include "precint/valuation.hpp"
#include "precint/verify.hpp"
#include "support.hpp"

namespace precint {
namespace {

using test::at;

QPoly poly(const std::string& s) { return parse_rational_function(s).num(); }

class ExampleOperator : public ::testing::Test {
 protected:
  OreOperator l = normalize(test::example_operator());
};

TEST_F(ExampleOperator, SingularPoints) {
  const SingularPoints s = singular_points(l, at(0));
  EXPECT_EQ(s.leftward, std::vector<long>{-2});
  EXPECT_EQ(s.leading, std::vector<long>{-2});
  EXPECT_EQ(s.rightward, std::vector<long>{1});
  EXPECT_EQ(default_anchor(l, at(0)), -2);
  const auto orbits = singular_orbits(l);
  ASSERT_EQ(orbits.size(), 1u);
  EXPECT_EQ(orbits[0].orbit_key(), "Z");
}

TEST_F(ExampleOperator, Values) {
  OrbitAnalysis an(l, at(0));
  auto v = [&](const std::string& e) { return val_at(parse_element(e, 3), at(0), an); };
  EXPECT_EQ(v("1"), ExtInt(0));
  EXPECT_EQ(v("S"), ExtInt(-1));
  EXPECT_EQ(v("S^2"), ExtInt(-1));
  EXPECT_EQ(v("x*S"), ExtInt(0));
  EXPECT_EQ(v("x*S^2"), ExtInt(0));
  EXPECT_EQ(v("0"), ExtInt::infinity());
}

TEST_F(ExampleOperator, Growths) {
  OrbitAnalysis an(l, at(0));
  EXPECT_EQ(an.left_end(), -2);
  EXPECT_EQ(an.right_end(), 1);
  EXPECT_EQ(an.growths(), (std::vector<long>{1, 0, -1}));
  EXPECT_EQ(valuation_growth(an, 2), -1);
}

TEST_F(ExampleOperator, GrowthIsStableUnderWiderWindows) {
  // Minimum q-valuation over windows far from the singular points, computed
  // by plain unrolling, must differ by the reported growth.
  const auto v = test::unroll_integer_orbit(l, -2, -20, 20);
  auto window = [&](std::size_t j, long from, long to) {
    ExtInt m = ExtInt::infinity();
    for (long n = from; n <= to; ++n) m = min(m, nu_q(v[j][static_cast<std::size_t>(n + 20)]));
    return m;
  };
  OrbitAnalysis an(l, at(0));
  for (std::size_t j = 0; j < 3; ++j) {
    for (long w : {3L, 8L, 15L}) {
      const ExtInt right = window(j, 2, 2 + w), left = window(j, -5 - w, -5);
      EXPECT_EQ(right.value() - left.value(), an.growths()[j]) << "j = " << j << ", width " << w;
    }
  }
}

TEST_F(ExampleOperator, Worklist) {
  ZSpec z;
  z.right_bounds["Z"] = 0;
  const auto wl = worklist(l, z);
  ASSERT_EQ(wl.size(), 1u);
  EXPECT_EQ(wl[0].points, (std::vector<long>{-2, -1, 0}));
  try {
    (void)worklist(l, ZSpec{});
    FAIL() << "expected MissingRightBound";
  } catch (const MissingRightBound& e) {
    EXPECT_EQ(e.orbit(), "Z");
    EXPECT_NE(std::string(e.what()).find("-1"), std::string::npos);
  }
}

TEST_F(ExampleOperator, AnchorOverrideMustLieLeft) {
  EXPECT_THROW(OrbitAnalysis(l, at(0), -1), PreconditionError);
  OrbitAnalysis far(l, at(0), -9);
  EXPECT_EQ(val_at(parse_element("S", 3), at(0), far), ExtInt(-1));
}

TEST(Valuation, NoSingularOrbitsGivesEmptyWorklist) {
  const OreOperator l = normalize(parse_operator("S^2 - 1"));
  EXPECT_TRUE(singular_orbits(l).empty());
  EXPECT_TRUE(worklist(l, ZSpec{}).empty());
  ShiftSpace space(l);
  EXPECT_EQ(space.val(parse_element("1", 2), at(4)), ExtInt(0));
}

TEST(Valuation, AlgebraicOrbitRepresentativeIsLeftmost) {
  const OreOperator l = normalize(parse_operator("(x^2 - 2)*((x+3)^2 - 2) + S"));
  const auto orbits = singular_orbits(l);
  ASSERT_EQ(orbits.size(), 1u);
  EXPECT_EQ(orbits[0].min_poly(), poly("(x+3)^2 - 2"));
  EXPECT_EQ(orbits[0].orbit_key(), "7 + 6*x + x^2");
  const AlgebraicPoint p = locate(l, AlgebraicPoint(poly("x^2 - 2"), 1));
  EXPECT_EQ(p.offset(), 4);
}

TEST(Valuation, RationalOnlySkipsAlgebraicOrbits) {
  const OreOperator l = normalize(parse_operator("x^2 - 2 + S^2"));
  ZSpec z;
  EXPECT_THROW((void)worklist(l, z), MissingRightBound);
  z.rational_only = true;
  EXPECT_TRUE(worklist(l, z).empty());
  z.rational_only = false;
  z.right_bounds["-2 + x^2"] = 1;
  const auto wl = worklist(l, z);
  ASSERT_EQ(wl.size(), 1u);
  EXPECT_EQ(wl[0].points, (std::vector<long>{0, 1}));
}

TEST(Valuation, ValueFunctionAxiomsOnRandomInputs) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const OreOperator l = random_operator({static_cast<int>(1 + seed % 3), 2, 3, seed});
    ShiftSpace space(l);
    const std::size_t r = space.dimension();
    for (long n = -2; n <= 2; ++n) {
      const AlgebraicPoint z = at(n);
      const QuotientElement a = random_element(r, seed * 10 + static_cast<std::uint64_t>(n + 5));
      const QuotientElement b = random_element(r, seed * 10 + static_cast<std::uint64_t>(n + 50));
      const RationalFunction f = parse_rational_function("(x - " + std::to_string(n) + ")^2/(x + 7)");
      EXPECT_EQ(space.val(a.scaled(f), z), space.val(a, z) + nu_at(f, z));
      EXPECT_GE(space.val(a + b, z), min(space.val(a, z), space.val(b, z)));
      EXPECT_EQ(space.val(a - a, z), ExtInt::infinity());
    }
  }
}

}  // namespace
}  // namespace precint
