#include "precint/ore.hpp"

#include <gmpxx.h>

namespace precint {

OreOperator::OreOperator(std::vector<RationalFunction> coeffs) : c_(std::move(coeffs)) { trim(); }

OreOperator OreOperator::shift(std::size_t power) {
  std::vector<RationalFunction> c(power + 1);
  c[power] = RationalFunction(1);
  return OreOperator(std::move(c));
}

OreOperator OreOperator::scalar(RationalFunction c) {
  return OreOperator(std::vector<RationalFunction>{std::move(c)});
}

void OreOperator::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

bool OreOperator::has_polynomial_coeffs() const {
  for (const auto& c : c_)
    if (!c.is_polynomial()) return false;
  return true;
}

OreOperator& OreOperator::operator+=(const OreOperator& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

OreOperator& OreOperator::operator-=(const OreOperator& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

OreOperator OreOperator::operator-() const {
  OreOperator r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

OreOperator OreOperator::left_scaled(const RationalFunction& a) const {
  OreOperator r = *this;
  for (auto& c : r.c_) c = a * c;
  r.trim();
  return r;
}

RationalFunction shift_by(const RationalFunction& f, long n) {
  if (n == 0) return f;
  return f.taylor_shift(Rational(n));
}

OreOperator ore_multiply(const OreOperator& a, const OreOperator& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<RationalFunction> r(a.coeffs().size() + b.coeffs().size() - 1);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a.coeffs()[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
      if (b.coeffs()[j].is_zero()) continue;
      r[i + j] += a.coeffs()[i] * shift_by(b.coeffs()[j], static_cast<long>(i));
    }
  }
  return OreOperator(std::move(r));
}

OreOperator normalize(const OreOperator& l) {
  if (l.is_zero()) throw PreconditionError("cannot normalize the zero operator");
  QPoly den(1);
  for (const auto& c : l.coeffs()) den = den * (c.den() / gcd(den, c.den()));
  std::vector<QPoly> polys;
  QPoly content;
  for (const auto& c : l.coeffs()) {
    polys.push_back(c.num() * (den / c.den()));
    content = gcd(content, polys.back());
  }
  // Integer content: clear rational denominators, then divide by the gcd.
  mpz_class lcm_den = 1, g = 0;
  for (auto& p : polys) {
    p = p / content;
    for (const auto& c : p.coeffs()) lcm_den = lcm(lcm_den, c.den());
  }
  for (auto& p : polys) {
    for (const auto& c : p.coeffs()) g = gcd(g, c.num() * (lcm_den / c.den()));
  }
  Rational scale(lcm_den, g);
  if (polys.back().lc().sign() < 0) scale = -scale;
  std::vector<RationalFunction> out;
  for (auto& p : polys) out.emplace_back(p.scale(scale));
  return OreOperator(std::move(out));
}

QuotientElement QuotientElement::basis_vector(std::size_t r, std::size_t i) {
  std::vector<RationalFunction> c(r);
  c.at(i) = RationalFunction(1);
  return QuotientElement(std::move(c));
}

bool QuotientElement::is_zero() const {
  for (const auto& c : coords_)
    if (!c.is_zero()) return false;
  return true;
}

QuotientElement& QuotientElement::operator+=(const QuotientElement& o) {
  if (o.dimension() != dimension()) throw PreconditionError("quotient dimension mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

QuotientElement& QuotientElement::operator-=(const QuotientElement& o) {
  if (o.dimension() != dimension()) throw PreconditionError("quotient dimension mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

QuotientElement QuotientElement::scaled(const RationalFunction& a) const {
  QuotientElement r = *this;
  for (auto& c : r.coords_) c = a * c;
  return r;
}

QuotientElement reduce_mod(const OreOperator& a, const OreOperator& l) {
  const long r = l.order();
  if (r < 1) throw PreconditionError("modulus must have positive order");
  std::vector<RationalFunction> c = a.coeffs();
  if (static_cast<long>(c.size()) < r) c.resize(static_cast<std::size_t>(r));
  for (long m = static_cast<long>(c.size()) - 1; m >= r; --m) {
    auto& top = c[static_cast<std::size_t>(m)];
    if (top.is_zero()) continue;
    const long k = m - r;
    // top * S^m = top / l_r(x+k) * S^k L - sum_{i<r} top / l_r(x+k) * l_i(x+k) S^{i+k}.
    const RationalFunction f = top / shift_by(l.coeffs().back(), k);
    for (long i = 0; i < r; ++i) {
      const auto& li = l.coeffs()[static_cast<std::size_t>(i)];
      if (li.is_zero()) continue;
      c[static_cast<std::size_t>(i + k)] -= f * shift_by(li, k);
    }
    top = RationalFunction();
  }
  c.resize(static_cast<std::size_t>(r));
  return QuotientElement(std::move(c));
}

std::string to_string(const OreOperator& l) {
  if (l.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < l.coeffs().size(); ++i) {
    const auto& c = l.coeffs()[i];
    if (c.is_zero()) continue;
    std::string mono = i == 0 ? "" : (i == 1 ? "S" : "S^" + std::to_string(i));
    std::string coeff = to_string(c, "x");
    bool negative = false;
    {
      std::size_t terms = 0;
      for (const auto& a : c.num().coeffs()) terms += a.is_zero() ? 0 : 1;
      if (terms == 1 && c.num().lc().sign() < 0) {
        negative = true;
        coeff = to_string(-c, "x");
      }
    }
    std::string term;
    if (i == 0) {
      term = coeff;
    } else if (coeff == "1") {
      term = mono;
    } else {
      const bool atomic = coeff.find_first_of(" /") == std::string::npos;
      term = (atomic ? coeff : "(" + coeff + ")") + "*" + mono;
    }
    if (out.empty()) {
      out = negative ? "-" + term : term;
    } else {
      out += negative ? " - " : " + ";
      out += term;
    }
  }
  return out;
}

std::string to_string(const QuotientElement& e) { return to_string(e.to_operator()); }

}  // namespace precint
