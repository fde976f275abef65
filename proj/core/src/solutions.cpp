#include "precint/solutions.hpp"

namespace precint {

SolutionBasis::SolutionBasis(OreOperator l, AlgebraicPoint orbit, long anchor)
    : l_(std::move(l)),
      orbit_(std::move(orbit)),
      r_(static_cast<std::size_t>(std::max(0L, l_.order()))),
      anchor_(anchor),
      root_(orbit_.root()),
      low_(anchor) {
  if (r_ == 0) throw PreconditionError("operator must have positive order");
  if (!l_.has_polynomial_coeffs()) throw PreconditionError("operator must be normalized");
  if (l_.coeffs().front().is_zero()) throw PreconditionError("l_0 must be nonzero");
  nums_.resize(r_);
  reduced_.resize(r_);
  for (std::size_t j = 0; j < r_; ++j) {
    for (std::size_t i = 0; i < r_; ++i) {
      nums_[j].push_back(KPoly(NFElem(i == j ? 1 : 0)));
      reduced_[j].emplace_back();
    }
  }
  dens_.assign(r_, KPoly(NFElem(1)));
}

KPoly SolutionBasis::coefficient_at(std::size_t i, long w) const {
  return eval_shifted(l_.coeffs()[i].num(), root_ + NFElem(w));
}

void SolutionBasis::extend_right() {
  // With w = high - r + 1 and n = w + r,
  //   l_r(w + q) f(n) = -sum_{i<r} l_i(w + q) f(w + i),
  // D(n) = D(n - 1) l_r(w + q), and D(p + 1) / D(p) = l_r(p + 1 - r + q)
  // once p + 1 - r reaches the anchor (1 inside the anchor window).
  const long w = cached_high() - static_cast<long>(r_) + 1;
  const std::size_t base = static_cast<std::size_t>(w - low_);
  std::vector<KPoly> scale(r_);
  scale[r_ - 1] = KPoly(NFElem(1));
  for (std::size_t i = r_ - 1; i-- > 0;) {
    const long k = w + static_cast<long>(i) + 1 - static_cast<long>(r_);
    scale[i] = k >= anchor_ ? scale[i + 1] * coefficient_at(r_, k) : scale[i + 1];
  }
  std::vector<KPoly> c(r_);
  for (std::size_t i = 0; i < r_; ++i) c[i] = coefficient_at(i, w) * scale[i];
  for (std::size_t j = 0; j < r_; ++j) {
    KPoly acc;
    for (std::size_t i = 0; i < r_; ++i) {
      if (c[i].is_zero() || nums_[j][base + i].is_zero()) continue;
      acc = acc + c[i] * nums_[j][base + i];
    }
    nums_[j].push_back(-acc);
    reduced_[j].emplace_back();
  }
  dens_.push_back(dens_.back() * coefficient_at(r_, w));
}

void SolutionBasis::extend_left() {
  // With w = low - 1,
  //   l_0(w + q) f(w) = -sum_{i>=1} l_i(w + q) f(w + i),
  // D(w) = l_0(w + q) D(w + 1), and D(p) / D(p + 1) = l_0(p + q) for p below
  // the anchor.
  const long w = low_ - 1;
  std::vector<KPoly> scale(r_ + 1);
  scale[1] = KPoly(NFElem(1));
  for (std::size_t i = 1; i < r_; ++i) {
    const long p = w + static_cast<long>(i);
    scale[i + 1] = p < anchor_ ? scale[i] * coefficient_at(0, p) : scale[i];
  }
  std::vector<KPoly> c(r_ + 1);
  for (std::size_t i = 1; i <= r_; ++i) c[i] = coefficient_at(i, w) * scale[i];
  for (std::size_t j = 0; j < r_; ++j) {
    KPoly acc;
    for (std::size_t i = 1; i <= r_; ++i) {
      if (c[i].is_zero() || nums_[j][i - 1].is_zero()) continue;
      acc = acc + c[i] * nums_[j][i - 1];
    }
    nums_[j].push_front(-acc);
    reduced_[j].emplace_front();
  }
  dens_.push_front(coefficient_at(0, w) * dens_.front());
  --low_;
}

void SolutionBasis::reach(long n) {
  while (n > cached_high()) extend_right();
  while (n < low_) extend_left();
}

const QRational& SolutionBasis::value(std::size_t j, long n) {
  if (j >= r_) throw PreconditionError("solution index out of range");
  reach(n);
  const auto at = static_cast<std::size_t>(n - low_);
  auto& slot = reduced_[j][at];
  if (!slot) slot = QRational(nums_[j][at], dens_[at]);
  return *slot;
}

QFraction SolutionBasis::fraction(std::size_t j, long n) {
  if (j >= r_) throw PreconditionError("solution index out of range");
  reach(n);
  const auto at = static_cast<std::size_t>(n - low_);
  return QFraction{nums_[j][at], dens_[at]};
}

long SolutionBasis::max_q_degree() const {
  long d = 0;
  for (const auto& den : dens_) d = std::max(d, den.degree());
  for (const auto& col : nums_)
    for (const auto& v : col) d = std::max(d, v.degree());
  return d;
}

SolutionBasis anchored_basis(const OreOperator& l, const AlgebraicPoint& orbit, long anchor) {
  return SolutionBasis(l, orbit, anchor);
}

const QRational& solution_value(SolutionBasis& basis, std::size_t j, long n) {
  return basis.value(j, n);
}

QRational apply_element(const QuotientElement& b, SolutionBasis& basis, std::size_t j, long n) {
  if (b.dimension() != basis.order()) throw PreconditionError("element has wrong dimension");
  const NFElem at = basis.orbit().root() + NFElem(n);
  QRational acc;
  for (std::size_t i = 0; i < b.dimension(); ++i) {
    if (b[i].is_zero()) continue;
    acc += eval_shifted(b[i], at) * basis.value(j, n + static_cast<long>(i));
  }
  return acc;
}

QFraction apply_element_fraction(const QuotientElement& b, SolutionBasis& basis, std::size_t j, long n) {
  if (b.dimension() != basis.order()) throw PreconditionError("element has wrong dimension");
  const NFElem at = basis.orbit().root() + NFElem(n);
  QFraction acc;
  for (std::size_t i = 0; i < b.dimension(); ++i) {
    if (b[i].is_zero()) continue;
    acc.add_product(eval_shifted(b[i], at), basis.fraction(j, n + static_cast<long>(i)));
  }
  return acc;
}

}  // namespace precint
