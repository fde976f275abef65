#pragma once

#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "precint/poly.hpp"
#include "precint/rational.hpp"

namespace precint {

using QPoly = Poly<Rational>;

/// Monic gcd over Q by the primitive remainder sequence over Z, which keeps
/// coefficients small where plain Euclid over Q blows up.
QPoly gcd(const QPoly& a, const QPoly& b);

/// Q[t]/(m) for a monic irreducible m.
class NumberField {
 public:
  /// Validates that m is monic, of degree >= 1, and irreducible over Q.
  static std::shared_ptr<const NumberField> make(const QPoly& min_poly);

  const QPoly& min_poly() const { return min_poly_; }
  std::size_t degree() const { return static_cast<std::size_t>(min_poly_.degree()); }

  /// Trace of t^k for k < degree (power sums of the roots of m).
  const Rational& trace_of_power(std::size_t k) const { return power_traces_.at(k); }

  QPoly reduce(const QPoly& p) const { return p % min_poly_; }

  bool same_as(const NumberField& o) const { return min_poly_ == o.min_poly_; }

 private:
  explicit NumberField(QPoly m);

  QPoly min_poly_;
  std::vector<Rational> power_traces_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

/// Element of a number field. A null field pointer denotes an element of Q
/// itself, which combines with elements of any field.
class NFElem {
 public:
  NFElem() = default;
  NFElem(long v) : rep_(Rational(v)) {}                    // NOLINT
  NFElem(const Rational& v) : rep_(v) {}                   // NOLINT
  NFElem(FieldPtr field, const QPoly& rep);

  static NFElem generator(const FieldPtr& field);

  const FieldPtr& field() const { return field_; }
  const QPoly& rep() const { return rep_; }
  std::size_t degree() const { return field_ ? field_->degree() : 1; }

  /// Coordinates in the power basis 1, t, ..., t^{deg-1}.
  std::vector<Rational> coords() const;

  bool is_zero() const { return rep_.is_zero(); }
  bool is_rational() const { return rep_.degree() <= 0; }
  /// Requires is_rational().
  Rational rational_value() const;

  NFElem inverse() const;

  NFElem& operator+=(const NFElem& o);
  NFElem& operator-=(const NFElem& o);
  NFElem& operator*=(const NFElem& o);
  NFElem& operator/=(const NFElem& o) { return *this *= o.inverse(); }

  friend NFElem operator+(NFElem a, const NFElem& b) { return a += b; }
  friend NFElem operator-(NFElem a, const NFElem& b) { return a -= b; }
  friend NFElem operator*(NFElem a, const NFElem& b) { return a *= b; }
  friend NFElem operator/(NFElem a, const NFElem& b) { return a /= b; }
  NFElem operator-() const;

  friend bool operator==(const NFElem& a, const NFElem& b);

  std::string to_string() const;

 private:
  void adopt_field(const NFElem& o);

  FieldPtr field_;
  QPoly rep_;
};

inline bool is_zero(const NFElem& e) { return e.is_zero(); }
inline std::string to_string(const NFElem& e) { return e.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const NFElem& e) { return os << e.to_string(); }
bool scalar_is_negative(const NFElem& e);
bool scalar_needs_parens(const NFElem& e);

/// Inverse of a nonzero element by the extended gcd with the minimal polynomial.
NFElem nf_invert(const NFElem& a);

/// The common field of two elements (null if both rational); throws FieldMismatch.
FieldPtr common_field(const FieldPtr& a, const FieldPtr& b);

/// Monic gcd; uses the integer remainder sequence when both inputs have
/// rational coefficients.
Poly<NFElem> gcd(const Poly<NFElem>& a, const Poly<NFElem>& b);

}  // namespace precint
