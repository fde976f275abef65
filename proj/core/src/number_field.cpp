#include "precint/number_field.hpp"

#include "precint/factor.hpp"

namespace precint {

NumberField::NumberField(QPoly m) : min_poly_(std::move(m)) {
  const std::size_t d = degree();
  power_traces_.reserve(d);
  // Tr(t^k) is the trace of multiplication by t^k on the power basis.
  for (std::size_t k = 0; k < d; ++k) {
    Rational tr;
    for (std::size_t i = 0; i < d; ++i) {
      QPoly prod = reduce(QPoly::monomial(Rational(1), k + i));
      tr += prod.coeff(i);
    }
    power_traces_.push_back(tr);
  }
}

std::shared_ptr<const NumberField> NumberField::make(const QPoly& min_poly) {
  if (min_poly.degree() < 1) throw PreconditionError("number field needs a nonconstant modulus");
  if (!min_poly.lc().is_one()) throw PreconditionError("number field modulus must be monic");
  if (!is_irreducible(min_poly)) {
    throw PreconditionError("number field modulus " + precint::to_string(min_poly, "t") +
                            " is reducible over Q");
  }
  return std::shared_ptr<const NumberField>(new NumberField(min_poly));
}

FieldPtr common_field(const FieldPtr& a, const FieldPtr& b) {
  if (!a) return b;
  if (!b || a == b) return a;
  if (!a->same_as(*b)) throw FieldMismatch("elements of different number fields combined");
  return a;
}

NFElem::NFElem(FieldPtr field, const QPoly& rep) : field_(std::move(field)) {
  rep_ = field_ ? field_->reduce(rep) : rep;
  if (!field_ && rep_.degree() > 0) throw PreconditionError("nonconstant element of Q");
}

NFElem NFElem::generator(const FieldPtr& field) {
  return NFElem(field, QPoly::variable());
}

std::vector<Rational> NFElem::coords() const {
  std::vector<Rational> c(degree());
  for (std::size_t i = 0; i < rep_.coeffs().size(); ++i) c[i] = rep_.coeffs()[i];
  return c;
}

Rational NFElem::rational_value() const {
  if (!is_rational()) throw PreconditionError("element is not rational");
  return rep_.coeff(0);
}

void NFElem::adopt_field(const NFElem& o) { field_ = common_field(field_, o.field_); }

NFElem& NFElem::operator+=(const NFElem& o) {
  adopt_field(o);
  rep_ += o.rep_;
  return *this;
}

NFElem& NFElem::operator-=(const NFElem& o) {
  adopt_field(o);
  rep_ -= o.rep_;
  return *this;
}

NFElem& NFElem::operator*=(const NFElem& o) {
  adopt_field(o);
  if (rep_.degree() <= 0 || o.rep_.degree() <= 0) {
    // Scalar times element needs no reduction.
    if (rep_.degree() <= 0) {
      const Rational s = rep_.coeff(0);
      rep_ = o.rep_;
      rep_.scale(s);
    } else {
      rep_.scale(o.rep_.coeff(0));
    }
    return *this;
  }
  rep_ = field_->reduce(rep_ * o.rep_);
  return *this;
}

NFElem NFElem::operator-() const {
  NFElem r = *this;
  r.rep_ = -r.rep_;
  return r;
}

bool operator==(const NFElem& a, const NFElem& b) {
  if (a.field_ && b.field_ && a.field_ != b.field_ && !a.field_->same_as(*b.field_)) {
    throw FieldMismatch("comparison across number fields");
  }
  return a.rep_ == b.rep_;
}

NFElem NFElem::inverse() const { return nf_invert(*this); }

NFElem nf_invert(const NFElem& a) {
  if (a.is_zero()) throw DivisionByZero("inverse of zero in number field");
  if (a.is_rational()) return NFElem(a.field(), QPoly(a.rep().coeff(0).inverse()));
  auto [g, s, t] = ext_gcd(a.rep(), a.field()->min_poly());
  if (g.degree() != 0) throw InternalError("minimal polynomial not irreducible");
  return NFElem(a.field(), s);
}

std::string NFElem::to_string() const { return precint::to_string(rep_, "t"); }

bool scalar_is_negative(const NFElem& e) {
  std::size_t terms = 0;
  for (const auto& c : e.rep().coeffs()) terms += c.is_zero() ? 0 : 1;
  return terms == 1 && e.rep().lc().sign() < 0;
}

bool scalar_needs_parens(const NFElem& e) {
  std::size_t terms = 0;
  for (const auto& c : e.rep().coeffs()) terms += c.is_zero() ? 0 : 1;
  return terms > 1 || (terms == 1 && e.rep().degree() > 0 && !e.rep().lc().is_one() &&
                       !(e.rep().lc() == Rational(-1)));
}

}  // namespace precint
