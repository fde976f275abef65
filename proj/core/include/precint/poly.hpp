#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "precint/errors.hpp"

namespace precint {

namespace detail {
template <class K>
bool scalar_zero(const K& c) {
  return is_zero(c);
}
}  // namespace detail

/// Dense univariate polynomial over a field K, ascending coefficients, with no
/// trailing zeros. The variable name is supplied only when printing.
///
/// K must be default-constructible to zero, constructible from long, provide
/// field arithmetic and equality, and have a free function is_zero(const K&).
template <class K>
class Poly {
 public:
  using coeff_type = K;

  Poly() = default;
  Poly(K c) {  // NOLINT: scalars embed as constants
    if (!detail::scalar_zero(c)) c_.push_back(std::move(c));
  }
  Poly(long c) : Poly(K(c)) {}  // NOLINT
  explicit Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly monomial(K c, std::size_t n) {
    if (detail::scalar_zero(c)) return Poly();
    Poly p;
    p.c_.assign(n + 1, K());
    p.c_[n] = std::move(c);
    return p;
  }
  static Poly variable() { return monomial(K(1), 1); }

  /// Degree, -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }

  K coeff(std::size_t i) const { return i < c_.size() ? c_[i] : K(); }
  const K& lc() const {
    if (c_.empty()) throw PreconditionError("leading coefficient of zero polynomial");
    return c_.back();
  }
  const std::vector<K>& coeffs() const { return c_; }

  /// Multiplicity of the variable as a factor (index of the lowest nonzero
  /// coefficient). Undefined for zero.
  std::size_t low_order() const {
    std::size_t i = 0;
    while (i < c_.size() && detail::scalar_zero(c_[i])) ++i;
    return i;
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
  }
  Poly& scale(const K& s) {
    if (detail::scalar_zero(s)) {
      c_.clear();
      return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<K> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (detail::scalar_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
  }
  Poly operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  K eval(const K& at) const {
    K r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * at + *it;
    return r;
  }

  /// p(x + a), by Horner on (x + a).
  Poly taylor_shift(const K& a) const {
    if (detail::scalar_zero(a)) return *this;
    Poly r;
    const Poly lin(std::vector<K>{a, K(1)});
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * lin + Poly(*it);
    return r;
  }

  /// p(g) for a polynomial g.
  Poly compose(const Poly& g) const {
    Poly r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * g + Poly(*it);
    return r;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<K> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * K(static_cast<long>(i));
    return Poly(std::move(r));
  }

  Poly monic() const {
    if (is_zero()) return *this;
    Poly r = *this;
    const K inv = K(1) / lc();
    for (auto& c : r.c_) c *= inv;
    return r;
  }

  Poly pow(unsigned e) const {
    Poly r(K(1)), b = *this;
    while (e) {
      if (e & 1U) r *= b;
      e >>= 1U;
      if (e) b *= b;
    }
    return r;
  }

  /// Divides out the variable n times (drops the n lowest coefficients).
  Poly shift_down(std::size_t n) const {
    if (n >= c_.size()) return Poly();
    return Poly(std::vector<K>(c_.begin() + static_cast<std::ptrdiff_t>(n), c_.end()));
  }

 private:
  void trim() {
    while (!c_.empty() && detail::scalar_zero(c_.back())) c_.pop_back();
  }

  std::vector<K> c_;
};

template <class K>
bool is_zero(const Poly<K>& p) {
  return p.is_zero();
}

/// Euclidean division; returns (quotient, remainder).
template <class K>
std::pair<Poly<K>, Poly<K>> divmod(const Poly<K>& a, const Poly<K>& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly<K>(), a};
  std::vector<K> rem = a.coeffs();
  const auto db = static_cast<std::size_t>(b.degree());
  std::vector<K> quo(rem.size() - db);
  const K inv = K(1) / b.lc();
  for (std::size_t k = quo.size(); k-- > 0;) {
    K q = rem[k + db] * inv;
    if (!is_zero(q)) {
      for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= q * b.coeffs()[j];
    }
    quo[k] = std::move(q);
  }
  rem.resize(db);
  return {Poly<K>(std::move(quo)), Poly<K>(std::move(rem))};
}

template <class K>
Poly<K> operator/(const Poly<K>& a, const Poly<K>& b) {
  return divmod(a, b).first;
}

template <class K>
Poly<K> operator%(const Poly<K>& a, const Poly<K>& b) {
  return divmod(a, b).second;
}

/// Monic gcd; gcd(0, 0) = 0.
template <class K>
Poly<K> gcd(Poly<K> a, Poly<K> b) {
  while (!b.is_zero()) {
    Poly<K> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Returns (g, s, t) with s*a + t*b = g, g monic.
template <class K>
std::tuple<Poly<K>, Poly<K>, Poly<K>> ext_gcd(const Poly<K>& a, const Poly<K>& b) {
  Poly<K> r0 = a, r1 = b, s0(1), s1, t0, t1(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly<K> s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Poly<K> t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const K inv = K(1) / r0.lc();
  return {r0.scale(inv), s0.scale(inv), t0.scale(inv)};
}

namespace detail {

template <class K>
void append_term(std::string& out, const K& c, std::size_t power, std::string_view var) {
  const bool first = out.empty();
  bool negative = scalar_is_negative(c);
  const K mag = negative ? -c : c;
  std::string body;
  const bool unit = mag == K(1);
  std::string mono;
  if (power >= 1) {
    mono = std::string(var);
    if (power > 1) mono += "^" + std::to_string(power);
  }
  if (power == 0) {
    body = scalar_needs_parens(mag) ? "(" + to_string(mag) + ")" : to_string(mag);
  } else if (unit) {
    body = mono;
  } else {
    body = (scalar_needs_parens(mag) ? "(" + to_string(mag) + ")" : to_string(mag)) + "*" + mono;
  }
  if (first) {
    out = negative ? "-" + body : body;
  } else {
    out += negative ? " - " : " + ";
    out += body;
  }
}

}  // namespace detail

/// Prints with ascending powers, e.g. "-2 + x^2".
template <class K>
std::string to_string(const Poly<K>& p, std::string_view var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (!is_zero(p.coeffs()[i])) detail::append_term(out, p.coeffs()[i], i, var);
  }
  return out;
}

/// True when printing needs parentheses to be read back as one factor.
template <class K>
bool poly_is_compound(const Poly<K>& p) {
  if (p.coeffs().size() <= 1) {
    return !p.is_zero() && scalar_needs_parens(p.lc());
  }
  std::size_t terms = 0;
  for (const auto& c : p.coeffs()) terms += is_zero(c) ? 0 : 1;
  return terms > 1 || scalar_needs_parens(p.lc()) || !(p.lc() == K(1));
}

}  // namespace precint
