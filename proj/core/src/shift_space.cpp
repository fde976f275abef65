#include "precint/shift_space.hpp"

#include "precint/errors.hpp"
#include "precint/solutions.hpp"

namespace precint {

ShiftSpace::ShiftSpace(const OreOperator& l) : l_(normalize(l)) {
  if (l_.order() < 1) throw PreconditionError("operator must have order at least 1");
  orbits_ = singular_orbits(l_);
}

AlgebraicPoint ShiftSpace::resolve(const AlgebraicPoint& z) const {
  for (const auto& rep : orbits_) {
    if (auto n = integer_shift(rep.min_poly(), z.min_poly())) return rep.with_offset(*n + z.offset());
  }
  if (z.is_rational()) {
    const Rational c = z.value().rational_value();
    if (c.is_integer()) return AlgebraicPoint::rational(c);
  }
  return z;
}

OrbitAnalysis& ShiftSpace::analysis(const AlgebraicPoint& z) {
  const AlgebraicPoint p = resolve(z);
  const std::string key = p.orbit_key();
  auto it = analyses_.find(key);
  if (it == analyses_.end()) {
    it = analyses_.emplace(key, std::make_unique<OrbitAnalysis>(l_, p.with_offset(0))).first;
  }
  return *it->second;
}

ExtInt ShiftSpace::val(const QuotientElement& e, const AlgebraicPoint& z) {
  if (e.dimension() != dimension()) throw PreconditionError("element has the wrong dimension");
  return val_at(e, resolve(z), analysis(z));
}

std::vector<QRational> ShiftSpace::evaluate(const QuotientElement& b, const AlgebraicPoint& z) {
  if (b.dimension() != dimension()) throw PreconditionError("element has the wrong dimension");
  OrbitAnalysis& an = analysis(z);
  const long n = resolve(z).offset();
  std::vector<QRational> out;
  for (std::size_t j = 0; j < dimension(); ++j) out.push_back(apply_element(b, an.basis(), j, n));
  return out;
}

std::optional<std::vector<NFElem>> ShiftSpace::find_alpha(std::span<const QuotientElement> prefix,
                                                          const QuotientElement& candidate,
                                                          const AlgebraicPoint& z) {
  std::vector<QuotientElement> all(prefix.begin(), prefix.end());
  all.push_back(candidate);
  require_independent(all);
  const std::size_t r = dimension();
  OrbitAnalysis& an = analysis(z);
  const long n = resolve(z).offset();
  std::vector<std::vector<QFraction>> vals;
  for (const auto& b : all) {
    vals.emplace_back();
    for (std::size_t j = 0; j < r; ++j) vals.back().push_back(apply_element_fraction(b, an.basis(), j, n));
    for (const auto& v : vals.back()) {
      if (nu_q(v) < ExtInt(0)) {
        throw PreconditionError("find_alpha needs elements of nonnegative value at " + z.to_string());
      }
    }
  }
  const std::size_t unknowns = prefix.size();
  Matrix<NFElem> a(r, unknowns);
  std::vector<NFElem> rhs(r);
  for (std::size_t j = 0; j < r; ++j) {
    for (std::size_t i = 0; i < unknowns; ++i) a(j, i) = q_coefficient(vals[i][j], 0);
    rhs[j] = -q_coefficient(vals[unknowns][j], 0);
  }
  return solve(a, rhs);
}

std::optional<long> ShiftSpace::discriminant(std::span<const QuotientElement> basis,
                                             const AlgebraicPoint& z) {
  const std::size_t r = dimension();
  if (basis.size() != r) throw PreconditionError("discriminant needs a full basis");
  Matrix<QRational> m(r, r);
  for (std::size_t i = 0; i < r; ++i) {
    const auto v = evaluate(basis[i], z);
    for (std::size_t j = 0; j < r; ++j) m(i, j) = v[j];
  }
  const ExtInt d = nu_q(determinant(m));
  if (d.is_infinite()) throw PreconditionError("basis elements are linearly dependent over Q(x)");
  return d.value();
}

}  // namespace precint
