#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "precint/qvalues.hpp"
#include "precint/valuation.hpp"
#include "precint/valued_space.hpp"

namespace precint {

/// V = Q(x)[S]/<L> with the shift-case value functions val_z, evaluated
/// through anchored solution bases. Keeps one OrbitAnalysis per orbit; use one
/// instance per worker.
class ShiftSpace : public ValuedSpace {
 public:
  /// Normalizes l.
  explicit ShiftSpace(const OreOperator& l);

  const OreOperator& modulus() const { return l_; }
  const std::vector<AlgebraicPoint>& orbits() const { return orbits_; }

  std::size_t dimension() const override { return static_cast<std::size_t>(l_.order()); }

  /// The point relative to its orbit representative.
  AlgebraicPoint resolve(const AlgebraicPoint& z) const;

  OrbitAnalysis& analysis(const AlgebraicPoint& z);

  ExtInt val(const QuotientElement& e, const AlgebraicPoint& z) override;

  std::optional<std::vector<NFElem>> find_alpha(std::span<const QuotientElement> prefix,
                                                const QuotientElement& candidate,
                                                const AlgebraicPoint& z) override;

  std::optional<long> discriminant(std::span<const QuotientElement> basis,
                                   const AlgebraicPoint& z) override;

  /// (B.b_j)(z) for every anchored solution b_j.
  std::vector<QRational> evaluate(const QuotientElement& b, const AlgebraicPoint& z);

 private:
  OreOperator l_;
  std::vector<AlgebraicPoint> orbits_;
  std::map<std::string, std::unique_ptr<OrbitAnalysis>> analyses_;
};

}  // namespace precint
