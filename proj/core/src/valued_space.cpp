#include "precint/valued_space.hpp"

#include "precint/errors.hpp"

namespace precint {

BasisMatrix BasisMatrix::standard(std::size_t r) {
  BasisMatrix b;
  for (std::size_t i = 0; i < r; ++i) b.rows.push_back(QuotientElement::basis_vector(r, i));
  return b;
}

namespace {

Matrix<RationalFunction> coordinate_matrix(std::span<const QuotientElement> elems) {
  const std::size_t cols = elems.empty() ? 0 : elems.front().dimension();
  Matrix<RationalFunction> m(elems.size(), cols);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (elems[i].dimension() != cols) throw PreconditionError("elements of different dimension");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = elems[i][j];
  }
  return m;
}

}  // namespace

Matrix<RationalFunction> BasisMatrix::coordinates() const { return coordinate_matrix(rows); }

bool BasisMatrix::is_independent() const { return rank(coordinates()) == rows.size(); }

void require_independent(std::span<const QuotientElement> elems) {
  if (rank(coordinate_matrix(elems)) != elems.size()) {
    throw PreconditionError("basis elements are linearly dependent over Q(x)");
  }
}

}  // namespace precint
