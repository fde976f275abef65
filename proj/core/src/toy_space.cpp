#include "precint/toy_space.hpp"

#include "precint/errors.hpp"
#include "precint/qvalues.hpp"

namespace precint {

namespace {

void check_dimension(const QuotientElement& e, std::size_t r) {
  if (e.dimension() != r) throw PreconditionError("element has the wrong dimension");
}

}  // namespace

ExtInt ToySpace::val(const QuotientElement& e, const AlgebraicPoint& z) {
  check_dimension(e, dimension());
  ExtInt v = ExtInt::infinity();
  for (std::size_t k = 0; k < dimension(); ++k) {
    v = min(v, ExtInt(weights_[k]) + nu_at(e[k], z));
  }
  return v;
}

std::optional<std::vector<NFElem>> ToySpace::find_alpha(std::span<const QuotientElement> prefix,
                                                        const QuotientElement& candidate,
                                                        const AlgebraicPoint& z) {
  std::vector<QuotientElement> all(prefix.begin(), prefix.end());
  all.push_back(candidate);
  for (const auto& e : all) {
    check_dimension(e, dimension());
    if (val(e, z) < ExtInt(0)) {
      throw PreconditionError("find_alpha needs elements of nonnegative value at " + z.to_string());
    }
  }
  require_independent(all);
  // With every value nonnegative, nu(c_k) >= -gamma_k, so only the
  // coefficient of q^(-gamma_k) can spoil positivity in coordinate k.
  const NFElem zv = z.value();
  const std::size_t r = dimension(), unknowns = prefix.size();
  Matrix<NFElem> a(r, unknowns);
  std::vector<NFElem> rhs(r);
  for (std::size_t k = 0; k < r; ++k) {
    const long n = -weights_[k];
    for (std::size_t i = 0; i < unknowns; ++i) a(k, i) = q_coefficient(eval_shifted(all[i][k], zv), n);
    rhs[k] = -q_coefficient(eval_shifted(candidate[k], zv), n);
  }
  return solve(a, rhs);
}

std::optional<long> ToySpace::discriminant(std::span<const QuotientElement> basis,
                                           const AlgebraicPoint& z) {
  const std::size_t r = dimension();
  if (basis.size() != r) throw PreconditionError("discriminant needs a full basis");
  Matrix<RationalFunction> m(r, r);
  for (std::size_t i = 0; i < r; ++i) {
    check_dimension(basis[i], r);
    for (std::size_t k = 0; k < r; ++k) m(i, k) = basis[i][k];
  }
  const ExtInt d = nu_at(determinant(m), z);
  if (d.is_infinite()) throw PreconditionError("basis elements are linearly dependent over Q(x)");
  long total = d.value();
  for (long g : weights_) total += g;
  return total;
}

}  // namespace precint
