#include <gmpxx.h>

#include <vector>

#include "precint/number_field.hpp"

namespace precint {

namespace {

using ZVec = std::vector<mpz_class>;

void trim(ZVec& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void make_primitive(ZVec& p) {
  mpz_class g = 0;
  for (const auto& c : p) {
    g = gcd(g, c);
    if (g == 1) return;
  }
  if (g == 0 || g == 1) return;
  for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

ZVec primitive_integer(const QPoly& p) {
  mpz_class l = 1;
  for (const auto& c : p.coeffs()) l = lcm(l, c.den());
  ZVec out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(c.num() * (l / c.den()));
  make_primitive(out);
  return out;
}

// a <- prem(a, b), then made primitive. deg a >= deg b >= 0.
void primitive_prem(ZVec& a, const ZVec& b) {
  const mpz_class& lb = b.back();
  const std::size_t db = b.size() - 1;
  while (!a.empty() && a.size() - 1 >= db) {
    const mpz_class la = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (auto& c : a) c *= lb;
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= la * b[j];
    trim(a);
  }
  make_primitive(a);
}

}  // namespace

QPoly gcd(const QPoly& a, const QPoly& b) {
  if (a.is_zero()) return b.is_zero() ? b : b.monic();
  if (b.is_zero()) return a.monic();
  if (a.degree() == 0 || b.degree() == 0) return QPoly(Rational(1));
  ZVec x = primitive_integer(a), y = primitive_integer(b);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    if (y.size() == 1) return QPoly(Rational(1));
    primitive_prem(x, y);
    std::swap(x, y);
  }
  std::vector<Rational> out;
  out.reserve(x.size());
  for (const auto& c : x) out.push_back(Rational(c, x.back()));
  return QPoly(std::move(out));
}

Poly<NFElem> gcd(const Poly<NFElem>& a, const Poly<NFElem>& b) {
  const auto rational = [](const Poly<NFElem>& p) {
    for (const auto& c : p.coeffs())
      if (!c.is_rational()) return false;
    return true;
  };
  if (!rational(a) || !rational(b)) return gcd<NFElem>(a, b);
  const auto down = [](const Poly<NFElem>& p) {
    std::vector<Rational> c;
    c.reserve(p.coeffs().size());
    for (const auto& e : p.coeffs()) c.push_back(e.rational_value());
    return QPoly(std::move(c));
  };
  const QPoly g = gcd(down(a), down(b));
  std::vector<NFElem> out(g.coeffs().begin(), g.coeffs().end());
  return Poly<NFElem>(std::move(out));
}

}  // namespace precint
