#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "precint/extended_int.hpp"
#include "precint/field_tower.hpp"
#include "precint/ore.hpp"
#include "precint/solutions.hpp"

namespace precint {

/// Offsets of the singular points of L on one orbit rho + Z.
struct SingularPoints {
  std::vector<long> leftward;   // roots of l_0: valuation may drop going left
  std::vector<long> rightward;  // roots of l_r(x - r): valuation may drop going right
  std::vector<long> leading;    // roots of l_r itself (rightward shifted by -r)

  bool empty() const { return leftward.empty() && rightward.empty(); }
};

SingularPoints singular_points(const OreOperator& l, const AlgebraicPoint& orbit);

/// Leftmost root of l_0 l_r on the orbit, or 0 if there is none. Anchoring the
/// solution basis there puts every root of l_0 l_r at or right of the window.
long default_anchor(const OreOperator& l, const AlgebraicPoint& orbit);

/// Orbit representatives (offset 0) of all orbits containing roots of l_0 l_r,
/// sorted by key. The integer orbit uses x; other orbits use the factor whose
/// roots lie furthest left.
std::vector<AlgebraicPoint> singular_orbits(const OreOperator& l);

/// Re-expresses a point relative to the representative of its orbit.
AlgebraicPoint locate(const OreOperator& l, const AlgebraicPoint& point);

/// Solution basis anchored at the default anchor.
SolutionBasis anchored_basis(const OreOperator& l, const AlgebraicPoint& orbit);

/// Everything known about L on one orbit: singular points, the anchored
/// solution basis, and the valuation growth of each basis solution.
class OrbitAnalysis {
 public:
  /// `anchor`, when given, must not exceed the default anchor.
  OrbitAnalysis(const OreOperator& l, const AlgebraicPoint& orbit,
                std::optional<long> anchor = std::nullopt);

  const AlgebraicPoint& orbit() const { return orbit_; }
  const SingularPoints& singular() const { return singular_; }
  SolutionBasis& basis() { return basis_; }
  const std::vector<long>& growths() const { return growths_; }
  bool has_singular_points() const { return !singular_.empty(); }
  bool has_nonzero_growth() const;

  /// Leftmost and rightmost singular offsets (both anchor when none).
  long left_end() const { return left_end_; }
  long right_end() const { return right_end_; }

  /// Growth of sum_j c_j b_j: right-window minus left-window minimum of nu_q.
  long growth_of(const std::vector<QRational>& c);

  /// Minimum nu_q of sum_j c_j b_j over the r positions from `start`.
  ExtInt window_min(const std::vector<QRational>& c, long start);

 private:
  AlgebraicPoint orbit_;
  SingularPoints singular_;
  long left_end_ = 0;
  long right_end_ = 0;
  SolutionBasis basis_;
  std::vector<long> growths_;
};

/// val_eta(B) = min_j nu_q((B.b_j)(eta)) for eta on the analysed orbit.
ExtInt val_at(const QuotientElement& b, const AlgebraicPoint& point, OrbitAnalysis& analysis);

/// Valuation growth of the j-th anchored basis solution.
long valuation_growth(const OrbitAnalysis& analysis, std::size_t j);

/// The admissible set Z: per-orbit right bounds, and whether algebraic orbits
/// take part (otherwise Z lies in Q).
struct ZSpec {
  std::map<std::string, long> right_bounds;
  bool rational_only = false;

  std::optional<long> bound_for(const std::string& orbit_key) const {
    auto it = right_bounds.find(orbit_key);
    if (it == right_bounds.end()) return std::nullopt;
    return it->second;
  }
};

struct WorklistEntry {
  AlgebraicPoint orbit;
  std::vector<long> points;  // ascending offsets
  std::vector<long> growths;
};

/// The finite set Z_0, orbit by orbit. Throws MissingRightBound when an orbit
/// has a basis solution of nonzero growth and no bound is given.
std::vector<WorklistEntry> worklist(const OreOperator& l, const ZSpec& zspec);

}  // namespace precint
