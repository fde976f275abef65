#include <gtest/gtest.h>

#include "precint/errors.hpp"
#include "precint/factor.hpp"
#include "precint/parse.hpp"
#include "precint/shift_space.hpp"
#include "precint/verify.hpp"
#include "support.hpp"

namespace precint {
namespace {

using test::at;

TEST(BruteVal, Examples) {
  const OreOperator l = test::example_operator();
  EXPECT_EQ(brute_val(parse_element("S", 3), at(0), l, 10), ExtInt(-1));
  EXPECT_EQ(brute_val(QuotientElement::zero(3), at(0), l, 10), ExtInt::infinity());
  EXPECT_EQ(brute_val(parse_element("1", 2), at(3), parse_operator("x^2 + 1 + S^2"), 5), ExtInt(0));
}

TEST(BruteVal, IndependentOfWindow) {
  const OreOperator l = test::example_operator();
  for (const char* e : {"1", "S", "x*S^2", "(x-2)/x^2 + (1/x)*S"})
    for (long w : {0L, 3L, 12L}) EXPECT_EQ(brute_val(parse_element(e, 3), at(0), l, w), ShiftSpace(l).val(parse_element(e, 3), at(0)));
}

TEST(ModuleEquality, Examples) {
  const BasisMatrix b = test::example_local_basis();
  EXPECT_TRUE(module_equal_at(b, b, at(0)));
  BasisMatrix scaled = b;
  scaled.rows[2] = scaled.rows[2].scaled(parse_rational_function("x"));
  EXPECT_FALSE(module_equal_at(scaled, b, at(0)));
  EXPECT_TRUE(module_equal_at(scaled, b, at(1)));
  BasisMatrix dependent = b;
  dependent.rows[2] = dependent.rows[1];
  EXPECT_THROW(module_equal_at(dependent, b, at(0)), SingularTransition);
}

TEST(ModuleEquality, EquivalenceRelationOnRandomTriples) {
  // Bases related by random triangular transitions, some unimodular at 0.
  for (std::uint64_t s = 0; s < 15; ++s) {
    const BasisMatrix base{{random_element(2, s), random_element(2, s + 500)}, {}};
    if (!base.is_independent()) continue;
    auto transform = [&](const BasisMatrix& b, const std::string& diag, const std::string& off) {
      BasisMatrix r = b;
      r.rows[0] = b.rows[0].scaled(parse_rational_function(diag));
      r.rows[1] = b.rows[1] + b.rows[0].scaled(parse_rational_function(off));
      return r;
    };
    const BasisMatrix a = transform(base, "(x+1)/(x-3)", s % 2 ? "1/(x+2)" : "1/x");
    const BasisMatrix c = transform(a, s % 3 ? "x + 5" : "x", "x^2");
    const AlgebraicPoint z = at(0);
    EXPECT_TRUE(module_equal_at(base, base, z));
    EXPECT_EQ(module_equal_at(a, base, z), module_equal_at(base, a, z));
    EXPECT_EQ(module_equal_at(c, a, z), module_equal_at(a, c, z));
    if (module_equal_at(base, a, z) && module_equal_at(a, c, z)) EXPECT_TRUE(module_equal_at(base, c, z));
  }
}

TEST(Certificate, Examples) {
  const OreOperator l = test::example_operator();
  const CertificateReport good = certificate(l, test::example_local_basis(), at(0), 200, 42);
  EXPECT_TRUE(good.clean());
  EXPECT_EQ(good.seed, 42u);
  EXPECT_EQ(good.samples, 200u);
  const CertificateReport bad = certificate(l, BasisMatrix::standard(3), at(0), 50, 42);
  EXPECT_FALSE(bad.clean());
  EXPECT_EQ(bad.row_vals[1], ExtInt(-1));
  const CertificateReport none = certificate(l, BasisMatrix::standard(3), at(0), 0, 1);
  EXPECT_TRUE(none.violations.empty());
}

TEST(Certificate, DetectsOverScaledRow) {
  BasisMatrix b = test::example_local_basis();
  b.rows[1] = b.rows[1].scaled(parse_rational_function("x"));
  EXPECT_FALSE(certificate(test::example_operator(), b, at(0), 100, 7).clean());
}

TEST(Certificate, DeterministicInSeed) {
  const OreOperator l = test::example_operator();
  EXPECT_EQ(to_string(certificate(l, BasisMatrix::standard(3), at(0), 30, 9)),
            to_string(certificate(l, BasisMatrix::standard(3), at(0), 30, 9)));
}

TEST(RandomOperator, Invariants) {
  for (std::uint64_t s = 0; s < 30; ++s) {
    const RandomOperatorSpec spec{static_cast<int>(1 + s % 3), 2, 4, s, s % 2 == 0};
    const OreOperator l = random_operator(spec);
    EXPECT_EQ(l.order(), spec.order);
    EXPECT_FALSE(l.coeff(0).is_zero());
    for (const auto& c : l.coeffs()) EXPECT_LE(c.num().degree(), 2);
    if (spec.no_rational_roots) {
      EXPECT_TRUE(rational_roots(l.coeff(0).num()).empty());
      EXPECT_TRUE(rational_roots(l.coeffs().back().num()).empty());
    }
    EXPECT_EQ(random_operator(spec), l);
  }
  EXPECT_THROW(random_operator({4, 2, 3, 0}), PreconditionError);
}

}  // namespace
}  // namespace precint
