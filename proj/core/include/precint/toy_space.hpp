#pragma once

#include <vector>

#include "precint/valued_space.hpp"

namespace precint {

/// Q(x)^r with val_z(sum_i a_i e_i) = min_i (gamma_i + nu_z(a_i)).
class ToySpace : public ValuedSpace {
 public:
  explicit ToySpace(std::vector<long> weights) : weights_(std::move(weights)) {}

  const std::vector<long>& weights() const { return weights_; }

  std::size_t dimension() const override { return weights_.size(); }

  ExtInt val(const QuotientElement& e, const AlgebraicPoint& z) override;

  std::optional<std::vector<NFElem>> find_alpha(std::span<const QuotientElement> prefix,
                                                const QuotientElement& candidate,
                                                const AlgebraicPoint& z) override;

  /// nu_z(det of coordinates) + sum_i gamma_i.
  std::optional<long> discriminant(std::span<const QuotientElement> basis,
                                   const AlgebraicPoint& z) override;

 private:
  std::vector<long> weights_;
};

}  // namespace precint
