#pragma once

#include <string>
#include <string_view>
#include <utility>

#include "precint/number_field.hpp"
#include "precint/poly.hpp"
#include "precint/rational.hpp"

namespace precint {

/// Element of K(v): num/den with gcd(num, den) = 1 and den monic. Every
/// constructor canonicalizes.
template <class K>
class RatFunc {
 public:
  using poly_type = Poly<K>;

  RatFunc() : den_(K(1)) {}
  RatFunc(K c) : num_(std::move(c)), den_(K(1)) {}       // NOLINT
  RatFunc(long c) : RatFunc(K(c)) {}                     // NOLINT
  RatFunc(Poly<K> num) : num_(std::move(num)), den_(K(1)) {}  // NOLINT
  RatFunc(Poly<K> num, Poly<K> den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    canonicalize();
  }

  /// num/den known to be coprime: skips the gcd.
  static RatFunc from_coprime(Poly<K> num, Poly<K> den) {
    if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
    return RatFunc(std::move(num), std::move(den), raw_tag{});
  }

  const Poly<K>& num() const { return num_; }
  const Poly<K>& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  RatFunc inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero rational function");
    return RatFunc(den_, num_);
  }

  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    Poly<K> g = gcd(a.den_, b.den_);
    if (g.degree() == 0) return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, raw_tag{});
    Poly<K> bd = b.den_ / g;
    return RatFunc(a.num_ * bd + b.num_ * (a.den_ / g), a.den_ * bd);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc();
    if (a.is_polynomial() && b.is_polynomial()) {
      RatFunc r;
      r.num_ = a.num_ * b.num_ * (K(1) / (a.den_.lc() * b.den_.lc()));
      return r;
    }
    // Cross-cancel so the product needs no further gcd.
    Poly<K> g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
    return RatFunc((a.num_ / g1) * (b.num_ / g2), (a.den_ / g2) * (b.den_ / g1), raw_tag{});
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }
  RatFunc operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Multiplies by a scalar.
  RatFunc scaled(const K& s) const {
    RatFunc r = *this;
    r.num_.scale(s);
    return r;
  }

  /// f(v + a).
  RatFunc taylor_shift(const K& a) const {
    return RatFunc(num_.taylor_shift(a), den_.taylor_shift(a), raw_tag{});
  }

  RatFunc pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    RatFunc r;
    r.num_ = num_.pow(static_cast<unsigned>(e));
    r.den_ = den_.pow(static_cast<unsigned>(e));
    return r;
  }

 private:
  struct raw_tag {};
  // num/den already coprime; only the denominator needs to be made monic.
  RatFunc(Poly<K> num, Poly<K> den, raw_tag) : num_(std::move(num)), den_(std::move(den)) {
    normalize_lc();
  }

  void canonicalize() {
    if (num_.is_zero()) {
      den_ = Poly<K>(K(1));
      return;
    }
    if (den_.degree() > 0) {
      Poly<K> g = gcd(num_, den_);
      if (g.degree() > 0) {
        num_ = num_ / g;
        den_ = den_ / g;
      }
    }
    normalize_lc();
  }

  void normalize_lc() {
    if (num_.is_zero()) {
      den_ = Poly<K>(K(1));
      return;
    }
    if (!(den_.lc() == K(1))) {
      const K inv = K(1) / den_.lc();
      num_.scale(inv);
      den_.scale(inv);
    }
  }

  Poly<K> num_;
  Poly<K> den_;
};

template <class K>
bool is_zero(const RatFunc<K>& f) {
  return f.is_zero();
}

/// Prints "num" or "(num)/(den)" with ascending powers.
template <class K>
std::string to_string(const RatFunc<K>& f, std::string_view var) {
  if (f.is_polynomial()) return to_string(f.num(), var);
  std::string n = to_string(f.num(), var);
  if (poly_is_compound(f.num())) n = "(" + n + ")";
  std::string d = to_string(f.den(), var);
  if (poly_is_compound(f.den())) d = "(" + d + ")";
  return n + "/" + d;
}

using RationalFunction = RatFunc<Rational>;
using KPoly = Poly<NFElem>;

/// Lifts a rational polynomial to one over a number field (or Q).
inline KPoly lift(const QPoly& p) {
  std::vector<NFElem> c;
  c.reserve(p.coeffs().size());
  for (const auto& a : p.coeffs()) c.emplace_back(a);
  return KPoly(std::move(c));
}

}  // namespace precint
