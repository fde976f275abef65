#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "precint/valuation.hpp"
#include "precint/valued_space.hpp"

namespace precint {

/// One pass of the while loop: row updated, discriminant before and after.
struct DiscStep {
  std::size_t row;
  std::optional<long> before;
  std::optional<long> after;
};

struct LocalResult {
  BasisMatrix basis;
  std::size_t updates = 0;                ///< while-loop iterations
  std::optional<long> initial_disc;       ///< Disc of the input after normalizing each row
  std::optional<long> final_disc;
  std::vector<DiscStep> steps;
};

struct LocalOptions {
  bool track_discriminant = true;
  /// Overrides the safety cap on while-loop iterations; otherwise the
  /// environment variable PRECINT_MAX_ITER, then initial Disc + dimension + 8.
  std::optional<std::size_t> max_iterations;
};

/// Local integral basis at z. Each row is first scaled by norm(z)^(-val);
/// then, while constants alpha give a combination of positive value, the row
/// is replaced by sum_i (sum over conjugates of sigma(alpha_i / (x - z))) B_i,
/// which for a rational z is (alpha_1 B_1 + ... + B_d) / (x - z).
LocalResult local_integral_basis(ValuedSpace& space, const BasisMatrix& basis,
                                 const AlgebraicPoint& z, const LocalOptions& options = {});

struct PointRun {
  AlgebraicPoint point;
  LocalResult result;
};

struct GlobalResult {
  BasisMatrix basis;
  std::vector<WorklistEntry> worklist;
  std::vector<PointRun> runs;
};

/// Integral basis of Q(x)[S]/<L> at every point of Z: runs the local
/// algorithm over the worklist, orbit by orbit, points ascending. L need not
/// be normalized.
GlobalResult global_integral_basis(const OreOperator& l, const ZSpec& zspec,
                                   const LocalOptions& options = {});

/// Disc at z of a full basis of Q(x)[S]/<L>: nu_q of det((B_i.b_j)(z)).
long discriminant(const OreOperator& l, const BasisMatrix& basis, const AlgebraicPoint& z);

}  // namespace precint
