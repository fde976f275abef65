#pragma once

#include <string>
#include <vector>

#include "precint/integral_basis.hpp"
#include "precint/ore.hpp"
#include "precint/qvalues.hpp"
#include "precint/valued_space.hpp"

namespace precint::test {

/// The operator (x+2)^2 + x S^2 + (x+2) S^3 of the worked example.
OreOperator example_operator();

BasisMatrix basis_of(const std::vector<std::string>& rows, std::size_t r);

/// The worked example's local basis at 0 and global basis for Z = C \ {1, 2, ...}.
BasisMatrix example_local_basis();
BasisMatrix example_global_basis();

/// c as an element of Q(q).
QRational qr(const std::string& num, const std::string& den = "1");

AlgebraicPoint at(long n);

/// Global basis, adding right bounds (each orbit's rightmost singular point)
/// for every orbit that demands one.
GlobalResult global_with_auto_bounds(const OreOperator& l, bool rational_only);

/// Straight unrolling of L's recurrence under the q-deformed action, in both
/// directions from identity initial values at `anchor` on the integer orbit.
/// Returns values[j][n - lo] for n in [lo, hi].
std::vector<std::vector<QRational>> unroll_integer_orbit(const OreOperator& l, long anchor, long lo,
                                                        long hi);

}  // namespace precint::test
