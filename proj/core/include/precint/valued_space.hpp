#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "precint/extended_int.hpp"
#include "precint/field_tower.hpp"
#include "precint/linalg.hpp"
#include "precint/ore.hpp"

namespace precint {

/// A finite-dimensional Q(x)-vector space with a value function val_z at each
/// algebraic point z. Elements are coordinate vectors on a fixed reference
/// basis, carried as QuotientElement.
///
/// Implementations may memoize internally, so the methods are non-const.
class ValuedSpace {
 public:
  virtual ~ValuedSpace() = default;

  virtual std::size_t dimension() const = 0;

  virtual ExtInt val(const QuotientElement& e, const AlgebraicPoint& z) = 0;

  /// Constants alpha_1..alpha_{d-1} in Q(z) with
  /// val_z(alpha_1 B_1 + ... + alpha_{d-1} B_{d-1} + B_d) > 0, or nullopt if
  /// none exist. Requires val_z(B_i) >= 0 and the B_i linearly independent.
  virtual std::optional<std::vector<NFElem>> find_alpha(std::span<const QuotientElement> prefix,
                                                        const QuotientElement& candidate,
                                                        const AlgebraicPoint& z) = 0;

  /// An integer discriminant function at z, when the space has one.
  virtual std::optional<long> discriminant(std::span<const QuotientElement> basis,
                                           const AlgebraicPoint& z) {
    (void)basis;
    (void)z;
    return std::nullopt;
  }

  /// Product of the conjugates of x - z.
  virtual QPoly uniformizer_norm(const AlgebraicPoint& z) const { return galois_norm_uniformizer(z); }

  /// Sum over the conjugates of sigma(c / (x - z)).
  virtual RationalFunction galois_sum(const NFElem& c, const AlgebraicPoint& z) const {
    return galois_trace_sum(c, z);
  }
};

/// Candidate integral basis: rows in coordinates of the reference basis,
/// plus a log of every update applied.
struct BasisMatrix {
  std::vector<QuotientElement> rows;
  std::vector<std::string> provenance;

  static BasisMatrix standard(std::size_t r);

  std::size_t size() const { return rows.size(); }
  Matrix<RationalFunction> coordinates() const;
  bool is_independent() const;

  friend bool operator==(const BasisMatrix& a, const BasisMatrix& b) { return a.rows == b.rows; }
};

/// Throws PreconditionError unless the elements are linearly independent.
void require_independent(std::span<const QuotientElement> elems);

}  // namespace precint
