#pragma once

#include <cstddef>
#include <deque>
#include <optional>
#include <vector>

#include "precint/field_tower.hpp"
#include "precint/ore.hpp"
#include "precint/qvalues.hpp"

namespace precint {

/// The r solutions b_0, ..., b_{r-1} of L on the orbit rho + Z fixed by
/// b_j(anchor + i) = delta_{ij}, under the q-deformed action
///   (L.f)(w) = sum_i l_i(w + q) f(w + i).
/// Values are computed on demand in both directions and memoized, so the
/// object is not safe for concurrent use; keep one per worker.
///
/// The table is fraction free: every position n carries one denominator
/// D(n) shared by all b_j, a product of l_r (right of the anchor window) or
/// l_0 (left of it) at the positions crossed, and the numerators follow from
/// polynomial multiplications alone. Reduced values are formed lazily.
///
/// Positions are integer offsets n denoting the point rho + n.
class SolutionBasis {
 public:
  /// `l` must be normalized (polynomial coefficients, l_0 and l_r nonzero).
  SolutionBasis(OreOperator l, AlgebraicPoint orbit, long anchor);

  const OreOperator& modulus() const { return l_; }
  const AlgebraicPoint& orbit() const { return orbit_; }
  std::size_t order() const { return r_; }
  long anchor() const { return anchor_; }

  /// b_j(rho + n), 0 <= j < r.
  const QRational& value(std::size_t j, long n);

  /// b_j(rho + n) as numerator over the shared denominator, without a gcd.
  QFraction fraction(std::size_t j, long n);

  /// Smallest and largest cached offsets.
  long cached_low() const { return low_; }
  long cached_high() const { return low_ + static_cast<long>(dens_.size()) - 1; }

  /// l_i(rho + w + q) as a polynomial in q.
  KPoly coefficient_at(std::size_t i, long w) const;

  /// Largest q-degree among cached values.
  long max_q_degree() const;

 private:
  void extend_right();
  void extend_left();

  OreOperator l_;
  AlgebraicPoint orbit_;
  std::size_t r_;
  long anchor_;
  NFElem root_;
  long low_;
  void reach(long n);

  std::vector<std::deque<KPoly>> nums_;  // nums_[j][n - low_]
  std::deque<KPoly> dens_;
  std::vector<std::deque<std::optional<QRational>>> reduced_;
};

SolutionBasis anchored_basis(const OreOperator& l, const AlgebraicPoint& orbit, long anchor);

/// b_j(rho + n); same as basis.value(j, n).
const QRational& solution_value(SolutionBasis& basis, std::size_t j, long n);

/// (B.b_j)(rho + n) = sum_i p_i(rho + n + q) b_j(rho + n + i) for B = sum_i p_i S^i.
QRational apply_element(const QuotientElement& b, SolutionBasis& basis, std::size_t j, long n);

/// The same value as an unreduced fraction, for valuations and coefficients.
QFraction apply_element_fraction(const QuotientElement& b, SolutionBasis& basis, std::size_t j, long n);

}  // namespace precint
