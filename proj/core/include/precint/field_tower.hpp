#pragma once

#include <optional>
#include <string>

#include "precint/extended_int.hpp"
#include "precint/number_field.hpp"
#include "precint/rational_function.hpp"

namespace precint {

/// The point rho + offset, where rho is a root of the monic irreducible
/// min_poly. A degree-1 min_poly encodes a rational point; integers always use
/// min_poly = x so that the integer orbit has one representative.
class AlgebraicPoint {
 public:
  AlgebraicPoint(QPoly min_poly, long offset = 0);

  /// The rational point c, represented with min_poly x and offset c when c is
  /// an integer, and with min_poly x - c otherwise.
  static AlgebraicPoint rational(const Rational& c);

  const QPoly& min_poly() const { return min_poly_; }
  long offset() const { return offset_; }
  std::size_t degree() const { return static_cast<std::size_t>(min_poly_.degree()); }
  bool is_rational() const { return degree() == 1; }

  /// The constant field Q(rho); null for rational points.
  const FieldPtr& field() const { return field_; }
  /// rho as a field element.
  NFElem root() const;
  /// rho + offset as a field element.
  NFElem value() const { return root() + NFElem(offset_); }

  AlgebraicPoint with_offset(long offset) const {
    AlgebraicPoint p = *this;
    p.offset_ = offset;
    return p;
  }

  /// Printable orbit key: "Z" for the integers, else the min_poly in x.
  std::string orbit_key() const;
  std::string to_string() const;

  friend bool operator==(const AlgebraicPoint& a, const AlgebraicPoint& b) {
    return a.offset_ == b.offset_ && a.min_poly_ == b.min_poly_;
  }

 private:
  QPoly min_poly_;
  long offset_;
  FieldPtr field_;
};

/// Multiplicity of an irreducible p in f; infinity for f = 0. Rejects constant
/// or reducible p.
ExtInt nu_at_factor(const RationalFunction& f, const QPoly& p);

/// Same as nu_at_factor without the irreducibility check.
ExtInt multiplicity(const RationalFunction& f, const QPoly& p);

/// deg(den) - deg(num); infinity for 0.
ExtInt nu_infinity(const RationalFunction& f);

/// The valuation nu_z at an algebraic point, via the multiplicity of its
/// minimal polynomial.
ExtInt nu_at(const RationalFunction& f, const AlgebraicPoint& z);

/// n with s(x) = p(x - n), i.e. roots(s) = roots(p) + n; none otherwise.
std::optional<long> integer_shift(const QPoly& p, const QPoly& s);

/// minPoly(x - offset): the product of x - sigma(z) over the conjugates of z.
QPoly galois_norm_uniformizer(const AlgebraicPoint& point);

/// Sum over the embeddings sigma of sigma(g) / (x - sigma(z)), as an element
/// of Q(x). Computed as the trace of multiplication by g/(x - z) on
/// Q(x)[t]/(m(t)).
RationalFunction galois_trace_sum(const NFElem& g, const AlgebraicPoint& point);

/// Lifts f in Q(x) to K(x).
RatFunc<NFElem> lift(const RationalFunction& f);

}  // namespace precint
