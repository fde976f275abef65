#pragma once

#include <utility>
#include <vector>

#include "precint/number_field.hpp"

namespace precint {

struct FactorPower {
  QPoly factor;  // monic, irreducible over Q
  unsigned multiplicity;

  friend bool operator==(const FactorPower&, const FactorPower&) = default;
};

/// Yun squarefree decomposition of a nonzero polynomial: pairs (a_i, i) with
/// p = lc(p) * prod a_i^i, each a_i monic squarefree and pairwise coprime.
std::vector<FactorPower> squarefree_decomposition(const QPoly& p);

/// Complete factorization over Q into monic irreducibles with multiplicities,
/// sorted by (degree, coefficients). The constant factor is dropped.
/// Zassenhaus: factor modulo a small prime, Hensel lift, recombine.
std::vector<FactorPower> factor(const QPoly& p);

bool is_irreducible(const QPoly& p);

/// Rational roots of a nonzero polynomial, ascending, without multiplicity.
std::vector<Rational> rational_roots(const QPoly& p);

}  // namespace precint
