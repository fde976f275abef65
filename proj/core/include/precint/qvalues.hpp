#pragma once

#include <string>
#include <vector>

#include "precint/extended_int.hpp"
#include "precint/field_tower.hpp"
#include "precint/rational_function.hpp"

namespace precint {

/// Exact element of K(q), K a number field or Q. Stands in for a Laurent
/// series in q: every value produced by a recurrence with polynomial
/// coefficients is rational in q.
using QRational = RatFunc<NFElem>;

/// Laurent expansion at q = 0: coeffs[i] is the coefficient of q^(valuation + i),
/// known through q^order.
struct QExpansion {
  long valuation = 0;
  std::vector<NFElem> coeffs;
  long order = 0;

  bool is_zero() const { return coeffs.empty(); }
  /// Coefficient of q^n; zero outside the stored range below `order`.
  NFElem coeff(long n) const;
};

/// num/den in K(q) without the gcd: enough for valuations and expansion
/// coefficients, which do not depend on the representative.
struct QFraction {
  KPoly num;
  KPoly den = KPoly(NFElem(1));

  /// this += a * b.
  void add_product(const QRational& a, const QRational& b);
  void add_product(const QRational& a, const QFraction& b);
};

/// ord_q(num) - ord_q(den); infinity for 0.
ExtInt nu_q(const QRational& f);

/// Expansion of f from q^nu_q(f) through q^upto.
QExpansion q_expand(const QRational& f, long upto);

/// The coefficient of q^n in the Laurent expansion of f.
NFElem q_coefficient(const QRational& f, long n);

ExtInt nu_q(const QFraction& f);
QExpansion q_expand(const QFraction& f, long upto);
NFElem q_coefficient(const QFraction& f, long n);

/// f(z + q) for f in Q(x) and z in K.
QRational eval_shifted(const RationalFunction& f, const NFElem& z);
KPoly eval_shifted(const QPoly& f, const NFElem& z);

/// max(deg num, deg den): growth diagnostic for solution tables.
long q_degree(const QRational& f);

std::string to_string(const QRational& f);

}  // namespace precint
