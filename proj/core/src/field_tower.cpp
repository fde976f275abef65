#include "precint/field_tower.hpp"

#include "precint/factor.hpp"

namespace precint {

AlgebraicPoint::AlgebraicPoint(QPoly min_poly, long offset)
    : min_poly_(std::move(min_poly)), offset_(offset) {
  if (min_poly_.degree() < 1 || !min_poly_.lc().is_one()) {
    throw PreconditionError("point minimal polynomial must be monic and nonconstant");
  }
  if (min_poly_.degree() >= 2) field_ = NumberField::make(min_poly_);
}

AlgebraicPoint AlgebraicPoint::rational(const Rational& c) {
  if (c.is_integer()) return AlgebraicPoint(QPoly::variable(), c.num().get_si());
  return AlgebraicPoint(QPoly(std::vector<Rational>{-c, Rational(1)}), 0);
}

NFElem AlgebraicPoint::root() const {
  if (field_) return NFElem::generator(field_);
  return NFElem(-min_poly_.coeff(0));
}

std::string AlgebraicPoint::orbit_key() const {
  if (min_poly_ == QPoly::variable()) return "Z";
  return precint::to_string(min_poly_, "x");
}

std::string AlgebraicPoint::to_string() const {
  if (is_rational()) return (-min_poly_.coeff(0) + Rational(offset_)).to_string();
  std::string s = "root(" + precint::to_string(min_poly_, "x") + ")";
  if (offset_ > 0) s += "+" + std::to_string(offset_);
  if (offset_ < 0) s += "-" + std::to_string(-offset_);
  return s;
}

namespace {

long strip(QPoly& f, const QPoly& p) {
  long m = 0;
  for (;;) {
    auto [q, r] = divmod(f, p);
    if (!r.is_zero()) return m;
    f = std::move(q);
    ++m;
  }
}

}  // namespace

ExtInt multiplicity(const RationalFunction& f, const QPoly& p) {
  if (f.is_zero()) return ExtInt::infinity();
  QPoly n = f.num(), d = f.den();
  return strip(n, p) - strip(d, p);
}

ExtInt nu_at_factor(const RationalFunction& f, const QPoly& p) {
  if (p.degree() < 1) throw PreconditionError("valuation at a constant");
  if (!is_irreducible(p)) throw PreconditionError("valuation at a reducible polynomial");
  return multiplicity(f, p);
}

ExtInt nu_infinity(const RationalFunction& f) {
  if (f.is_zero()) return ExtInt::infinity();
  return f.den().degree() - f.num().degree();
}

ExtInt nu_at(const RationalFunction& f, const AlgebraicPoint& z) {
  return multiplicity(f, galois_norm_uniformizer(z));
}

std::optional<long> integer_shift(const QPoly& p, const QPoly& s) {
  if (p.degree() != s.degree() || p.degree() < 1) return std::nullopt;
  const long d = p.degree();
  // p(x - n) has subleading coefficient p_{d-1} - d*n (both monic).
  const Rational n = (p.coeff(d - 1) - s.coeff(d - 1)) / Rational(d);
  if (!n.is_integer() || !n.num().fits_slong_p()) return std::nullopt;
  const long shift = n.num().get_si();
  if (p.taylor_shift(Rational(-shift)) == s) return shift;
  return std::nullopt;
}

QPoly galois_norm_uniformizer(const AlgebraicPoint& point) {
  return point.min_poly().taylor_shift(Rational(-point.offset()));
}

RationalFunction galois_trace_sum(const NFElem& g, const AlgebraicPoint& point) {
  if (!point.field()) {
    const Rational z = -point.min_poly().coeff(0) + Rational(point.offset());
    return RationalFunction(QPoly(g.rational_value()),
                            QPoly(std::vector<Rational>{-z, Rational(1)}));
  }
  const auto& field = point.field();
  if (g.field() && !g.field()->same_as(*field)) throw FieldMismatch("trace over a foreign field");
  // In Q(X)[t]/(m): (X - t)^{-1} = Q(X, t) / m(X) with
  // Q(X, t) = (m(X) - m(t)) / (X - t) = sum_j t^j c_j(X), c_j = sum_{k>j} m_k X^{k-1-j}.
  // Tr(g (X - t)^{-1}) = sum_j Tr(g t^j) c_j(X) / m(X); then X = x - offset.
  const QPoly& m = field->min_poly();
  const std::size_t d = field->degree();
  QPoly numer;
  for (std::size_t j = 0; j < d; ++j) {
    const NFElem gt = g * NFElem(field, QPoly::monomial(Rational(1), j));
    Rational tr;
    const auto c = gt.coords();
    for (std::size_t i = 0; i < d; ++i) tr += c[i] * field->trace_of_power(i);
    if (tr.is_zero()) continue;
    std::vector<Rational> cj(d - j);
    for (std::size_t k = j + 1; k <= d; ++k) cj[k - 1 - j] = m.coeff(k);
    numer += QPoly(std::move(cj)).scale(tr);
  }
  const Rational shift(-point.offset());
  return RationalFunction(numer.taylor_shift(shift), m.taylor_shift(shift));
}

RatFunc<NFElem> lift(const RationalFunction& f) {
  return RatFunc<NFElem>(lift(f.num()), lift(f.den()));
}

}  // namespace precint
