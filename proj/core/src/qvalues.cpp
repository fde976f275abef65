#include "precint/qvalues.hpp"

namespace precint {

NFElem QExpansion::coeff(long n) const {
  const long i = n - valuation;
  if (i < 0 || i >= static_cast<long>(coeffs.size())) return NFElem();
  return coeffs[static_cast<std::size_t>(i)];
}

void QFraction::add_product(const QRational& a, const QRational& b) {
  add_product(a, QFraction{b.num(), b.den()});
}

void QFraction::add_product(const QRational& a, const QFraction& b) {
  if (a.is_zero() || b.num.is_zero()) return;
  KPoly n = a.num() * b.num, d = a.den() * b.den;
  if (num.is_zero()) {
    num = std::move(n);
    den = std::move(d);
  } else if (d == den) {
    num = num + n;
  } else {
    num = num * d + n * den;
    den = den * d;
  }
}

namespace {

ExtInt nu_of(const KPoly& num, const KPoly& den) {
  if (num.is_zero()) return ExtInt::infinity();
  return static_cast<std::int64_t>(num.low_order()) - static_cast<std::int64_t>(den.low_order());
}

QExpansion expand(const KPoly& num, const KPoly& den, long upto) {
  QExpansion e;
  e.order = upto;
  if (num.is_zero()) return e;
  const std::size_t on = num.low_order(), od = den.low_order();
  e.valuation = static_cast<long>(on) - static_cast<long>(od);
  if (upto < e.valuation) return e;
  const KPoly n = num.shift_down(on), d = den.shift_down(od);
  const auto terms = static_cast<std::size_t>(upto - e.valuation + 1);
  // Power series division n / d with d(0) != 0.
  const NFElem inv = NFElem(1) / d.coeff(0);
  e.coeffs.resize(terms);
  for (std::size_t k = 0; k < terms; ++k) {
    NFElem c = n.coeff(k);
    const std::size_t lim = std::min<std::size_t>(k, static_cast<std::size_t>(d.degree()));
    for (std::size_t i = 1; i <= lim; ++i) c -= d.coeffs()[i] * e.coeffs[k - i];
    e.coeffs[k] = c * inv;
  }
  return e;
}

}  // namespace

ExtInt nu_q(const QRational& f) { return nu_of(f.num(), f.den()); }

ExtInt nu_q(const QFraction& f) { return nu_of(f.num, f.den); }

QExpansion q_expand(const QRational& f, long upto) { return expand(f.num(), f.den(), upto); }

QExpansion q_expand(const QFraction& f, long upto) { return expand(f.num, f.den, upto); }

NFElem q_coefficient(const QFraction& f, long n) { return q_expand(f, n).coeff(n); }

NFElem q_coefficient(const QRational& f, long n) { return q_expand(f, n).coeff(n); }

KPoly eval_shifted(const QPoly& f, const NFElem& z) { return lift(f).taylor_shift(z); }

QRational eval_shifted(const RationalFunction& f, const NFElem& z) {
  // A Taylor shift preserves coprimality.
  return QRational::from_coprime(eval_shifted(f.num(), z), eval_shifted(f.den(), z));
}

long q_degree(const QRational& f) { return std::max(f.num().degree(), f.den().degree()); }

std::string to_string(const QRational& f) { return precint::to_string(f, "q"); }

}  // namespace precint
