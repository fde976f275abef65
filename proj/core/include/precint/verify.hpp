#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "precint/extended_int.hpp"
#include "precint/field_tower.hpp"
#include "precint/ore.hpp"
#include "precint/qvalues.hpp"
#include "precint/valued_space.hpp"

namespace precint {

/// Recomputes val at one point by unrolling the recurrence rightwards from a
/// fresh anchor `window` positions left of both the default anchor and the
/// point. Shares no state with SolutionBasis or OrbitAnalysis.
class BruteForceOracle {
 public:
  BruteForceOracle(const OreOperator& l, const AlgebraicPoint& point, long window);

  const AlgebraicPoint& point() const { return point_; }
  long anchor() const { return anchor_; }

  ExtInt val(const QuotientElement& b) const;

  /// (B.b_j)(point) for each solution b_j of the oracle's own basis.
  std::vector<QFraction> evaluate(const QuotientElement& b) const;

 private:
  std::size_t r_ = 0;
  AlgebraicPoint point_;
  long anchor_ = 0;
  // values_[j][i] = b_j(point + i), 0 <= i < r
  std::vector<std::vector<QRational>> values_;
};

ExtInt brute_val(const QuotientElement& b, const AlgebraicPoint& point, const OreOperator& l,
                 long window);

/// True iff A = T B with min nu_z(T_ij) >= 0 and nu_z(det T) = 0. Throws
/// SingularTransition when the rows do not span the same space.
bool module_equal_at(const BasisMatrix& a, const BasisMatrix& b, const AlgebraicPoint& z);

struct CertificateViolation {
  std::size_t sample;
  std::vector<long> exponents;  // prescribed nu_z of each coordinate
  ExtInt val;
};

struct CertificateReport {
  std::string point;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::vector<ExtInt> row_vals;
  std::vector<CertificateViolation> violations;

  bool clean() const { return violations.empty(); }
};

/// Samples coordinate vectors a with nu_z(a_i) drawn from -2..2 and checks
/// val(sum a_i B_i) >= 0 exactly when every nu_z(a_i) >= 0, using the
/// brute-force oracle. Each row is evaluated on the oracle's solutions once;
/// a sample's sign is then read off the q-expansion below q^0, and the full
/// value is computed only for violations.
CertificateReport certificate(const OreOperator& l, const BasisMatrix& basis,
                              const AlgebraicPoint& z, std::size_t samples, std::uint64_t seed,
                              long window = 8);

std::string to_string(const CertificateReport& report);

struct RandomOperatorSpec {
  int order = 2;           // 1..3
  int max_degree = 2;      // coefficient degree bound
  long height = 3;         // integer coefficients in [-height, height]
  std::uint64_t seed = 0;
  bool no_rational_roots = false;  // reject l_0, l_r with rational roots
};

/// A random operator with l_0 and l_r nonzero, deterministic in the seed.
OreOperator random_operator(const RandomOperatorSpec& spec);

/// A random element of order < r whose coordinates are quotients of small
/// integer polynomials.
QuotientElement random_element(std::size_t r, std::uint64_t seed, int max_degree = 2,
                               long height = 3);

}  // namespace precint
