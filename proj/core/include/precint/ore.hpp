#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "precint/rational_function.hpp"

namespace precint {

/// Element of the shift algebra Q(x)[S] with S x = (x + 1) S, stored as
/// sum_i coeffs[i] S^i with coefficients on the left.
class OreOperator {
 public:
  OreOperator() = default;
  explicit OreOperator(std::vector<RationalFunction> coeffs);

  static OreOperator shift(std::size_t power = 1);
  static OreOperator scalar(RationalFunction c);

  /// Highest power of S with nonzero coefficient; -1 for zero.
  long order() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }

  const std::vector<RationalFunction>& coeffs() const { return c_; }
  RationalFunction coeff(std::size_t i) const { return i < c_.size() ? c_[i] : RationalFunction(); }

  /// Every coefficient is a polynomial.
  bool has_polynomial_coeffs() const;

  OreOperator& operator+=(const OreOperator& o);
  OreOperator& operator-=(const OreOperator& o);
  friend OreOperator operator+(OreOperator a, const OreOperator& b) { return a += b; }
  friend OreOperator operator-(OreOperator a, const OreOperator& b) { return a -= b; }
  OreOperator operator-() const;
  friend bool operator==(const OreOperator&, const OreOperator&) = default;

  /// Left multiplication by a scalar a(x).
  OreOperator left_scaled(const RationalFunction& a) const;

 private:
  void trim();

  std::vector<RationalFunction> c_;
};

/// The noncommutative product A*B, moving S^i past a(x) as a(x + i) S^i.
OreOperator ore_multiply(const OreOperator& a, const OreOperator& b);

/// Clears denominators and divides out the polynomial and integer content so
/// that all coefficients lie in Z[x], are jointly coprime over Q[x], have
/// integer content 1, and the leading coefficient of l_r has positive lc.
/// Left multiplication by an element of Q(x), so the left ideal is unchanged.
OreOperator normalize(const OreOperator& l);

/// Residue class in V = Q(x)[S] / Q(x)[S] L, as coordinates on 1, S, ..., S^{r-1}.
class QuotientElement {
 public:
  QuotientElement() = default;
  explicit QuotientElement(std::vector<RationalFunction> coords) : coords_(std::move(coords)) {}
  static QuotientElement zero(std::size_t r) { return QuotientElement(std::vector<RationalFunction>(r)); }
  /// The class of S^i.
  static QuotientElement basis_vector(std::size_t r, std::size_t i);

  std::size_t dimension() const { return coords_.size(); }
  const std::vector<RationalFunction>& coords() const { return coords_; }
  const RationalFunction& operator[](std::size_t i) const { return coords_[i]; }
  bool is_zero() const;

  QuotientElement& operator+=(const QuotientElement& o);
  QuotientElement& operator-=(const QuotientElement& o);
  friend QuotientElement operator+(QuotientElement a, const QuotientElement& b) { return a += b; }
  friend QuotientElement operator-(QuotientElement a, const QuotientElement& b) { return a -= b; }
  friend bool operator==(const QuotientElement&, const QuotientElement&) = default;

  /// a(x) * this.
  QuotientElement scaled(const RationalFunction& a) const;

  OreOperator to_operator() const { return OreOperator(coords_); }

 private:
  std::vector<RationalFunction> coords_;
};

/// Right-reduces A modulo L, rewriting S^{r+k} through S^k L.
QuotientElement reduce_mod(const OreOperator& a, const OreOperator& l);

/// f(x + n).
RationalFunction shift_by(const RationalFunction& f, long n);

std::string to_string(const OreOperator& l);
std::string to_string(const QuotientElement& e);

}  // namespace precint
