#include "precint/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <tuple>

namespace precint {
namespace {

using u64 = std::uint64_t;

// ---------------------------------------------------------------------------
// Polynomials over Z/pZ for a word-size odd prime p, ascending and trimmed.

using ZpPoly = std::vector<u64>;

struct Zp {
  u64 p;

  u64 add(u64 a, u64 b) const { return (a + b) % p; }
  u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
  u64 mul(u64 a, u64 b) const { return (a * b) % p; }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    a %= p;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, p - 2); }

  void trim(ZpPoly& f) const {
    while (!f.empty() && f.back() == 0) f.pop_back();
  }
  long deg(const ZpPoly& f) const { return static_cast<long>(f.size()) - 1; }

  ZpPoly sub(const ZpPoly& a, const ZpPoly& b) const {
    ZpPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = sub(r[i], b[i]);
    trim(r);
    return r;
  }
  ZpPoly add(const ZpPoly& a, const ZpPoly& b) const {
    ZpPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = add(r[i], b[i]);
    trim(r);
    return r;
  }
  ZpPoly mul(const ZpPoly& a, const ZpPoly& b) const {
    if (a.empty() || b.empty()) return {};
    ZpPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!a[i]) continue;
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = add(r[i + j], mul(a[i], b[j]));
    }
    trim(r);
    return r;
  }
  std::pair<ZpPoly, ZpPoly> divmod(const ZpPoly& a, const ZpPoly& b) const {
    ZpPoly rem = a;
    if (deg(a) < deg(b)) return {{}, rem};
    const std::size_t db = b.size() - 1;
    ZpPoly quo(a.size() - db, 0);
    const u64 il = inv(b.back());
    for (std::size_t k = quo.size(); k-- > 0;) {
      u64 q = mul(rem[k + db], il);
      quo[k] = q;
      if (q)
        for (std::size_t j = 0; j <= db; ++j) rem[k + j] = sub(rem[k + j], mul(q, b[j]));
    }
    rem.resize(db);
    trim(rem);
    trim(quo);
    return {quo, rem};
  }
  ZpPoly mod(const ZpPoly& a, const ZpPoly& b) const { return divmod(a, b).second; }
  ZpPoly monic(ZpPoly f) const {
    if (f.empty()) return f;
    const u64 il = inv(f.back());
    for (auto& c : f) c = mul(c, il);
    return f;
  }
  ZpPoly gcd(ZpPoly a, ZpPoly b) const {
    while (!b.empty()) {
      ZpPoly r = mod(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }
  // (g, s, t) with s a + t b = g monic.
  std::tuple<ZpPoly, ZpPoly, ZpPoly> ext_gcd(const ZpPoly& a, const ZpPoly& b) const {
    ZpPoly r0 = a, r1 = b, s0{1}, s1, t0, t1{1};
    while (!r1.empty()) {
      auto [q, r] = divmod(r0, r1);
      r0 = std::move(r1);
      r1 = std::move(r);
      ZpPoly s2 = sub(s0, mul(q, s1));
      s0 = std::move(s1);
      s1 = std::move(s2);
      ZpPoly t2 = sub(t0, mul(q, t1));
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    const u64 il = inv(r0.back());
    for (auto* v : {&r0, &s0, &t0})
      for (auto& c : *v) c = mul(c, il);
    return {r0, s0, t0};
  }
  ZpPoly derivative(const ZpPoly& f) const {
    if (f.size() <= 1) return {};
    ZpPoly r(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); ++i) r[i - 1] = mul(f[i], i % p);
    trim(r);
    return r;
  }
  ZpPoly powmod(ZpPoly base, const mpz_class& e, const ZpPoly& m) const {
    ZpPoly r{1};
    base = mod(base, m);
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
      r = mod(mul(r, r), m);
      if (mpz_tstbit(e.get_mpz_t(), i)) r = mod(mul(r, base), m);
    }
    return r;
  }
};

// Distinct-degree factorization of a monic squarefree f: (product, degree).
std::vector<std::pair<ZpPoly, long>> distinct_degree(const Zp& F, ZpPoly f) {
  std::vector<std::pair<ZpPoly, long>> out;
  const ZpPoly x{0, 1};
  ZpPoly h = x;
  const mpz_class p(static_cast<unsigned long>(F.p));
  for (long i = 1; 2 * i <= F.deg(f); ++i) {
    h = F.powmod(h, p, f);
    ZpPoly g = F.gcd(F.sub(h, x), f);
    if (F.deg(g) > 0) {
      out.emplace_back(g, i);
      f = F.divmod(f, g).first;
      h = F.mod(h, f);
    }
  }
  if (F.deg(f) > 0) out.emplace_back(f, F.deg(f));
  return out;
}

// Cantor-Zassenhaus equal-degree splitting.
void equal_degree(const Zp& F, const ZpPoly& g, long d, std::mt19937_64& rng,
                  std::vector<ZpPoly>& out) {
  if (F.deg(g) == d) {
    out.push_back(g);
    return;
  }
  mpz_class e;
  mpz_ui_pow_ui(e.get_mpz_t(), F.p, static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  std::uniform_int_distribution<u64> dist(0, F.p - 1);
  for (;;) {
    ZpPoly a(static_cast<std::size_t>(F.deg(g)));
    for (auto& c : a) c = dist(rng);
    F.trim(a);
    if (F.deg(a) < 1) continue;
    ZpPoly b = F.sub(F.powmod(a, e, g), ZpPoly{1});
    ZpPoly s = F.gcd(b, g);
    if (F.deg(s) > 0 && F.deg(s) < F.deg(g)) {
      equal_degree(F, s, d, rng, out);
      equal_degree(F, F.divmod(g, s).first, d, rng, out);
      return;
    }
  }
}

std::vector<ZpPoly> factor_mod_p(const Zp& F, const ZpPoly& f) {
  std::mt19937_64 rng(0x5eed5eedULL ^ F.p);
  std::vector<ZpPoly> out;
  for (auto& [g, d] : distinct_degree(F, f)) equal_degree(F, g, d, rng, out);
  return out;
}

// ---------------------------------------------------------------------------
// Integer polynomials.

using ZPoly = std::vector<mpz_class>;

void trim(ZPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, mpz_class(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

// Reduces coefficients into [0, m).
ZPoly zmod(ZPoly f, const mpz_class& m) {
  for (auto& c : f) {
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  }
  trim(f);
  return f;
}

// Reduces coefficients into (-m/2, m/2].
ZPoly zsymmetric(ZPoly f, const mpz_class& m) {
  const mpz_class half = m / 2;
  for (auto& c : f) {
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (c > half) c -= m;
  }
  trim(f);
  return f;
}

ZpPoly to_zp(const ZPoly& f, const Zp& F) {
  ZpPoly r(f.size());
  const mpz_class p(static_cast<unsigned long>(F.p));
  for (std::size_t i = 0; i < f.size(); ++i) {
    mpz_class c;
    mpz_fdiv_r(c.get_mpz_t(), f[i].get_mpz_t(), p.get_mpz_t());
    r[i] = c.get_ui();
  }
  F.trim(r);
  return r;
}

ZPoly from_zp(const ZpPoly& f) {
  ZPoly r;
  r.reserve(f.size());
  for (u64 c : f) r.emplace_back(static_cast<unsigned long>(c));
  return r;
}

mpz_class content(const ZPoly& f) {
  mpz_class g = 0;
  for (const auto& c : f) g = gcd(g, c);
  return g;
}

ZPoly primitive_part(ZPoly f) {
  mpz_class g = content(f);
  if (!f.empty() && f.back() < 0) g = -g;
  if (g != 0 && g != 1)
    for (auto& c : f) c /= g;
  return f;
}

// Primitive integer polynomial with positive leading coefficient.
ZPoly to_primitive_z(const QPoly& p) {
  mpz_class l = 1;
  for (const auto& c : p.coeffs()) l = lcm(l, c.den());
  ZPoly r;
  for (const auto& c : p.coeffs()) r.push_back(c.num() * (l / c.den()));
  return primitive_part(r);
}

QPoly to_q(const ZPoly& f) {
  std::vector<Rational> c;
  for (const auto& a : f) c.emplace_back(a);
  return QPoly(std::move(c));
}

// ---------------------------------------------------------------------------
// Hensel lifting.

// Lifts F = g*h (mod p), g, h monic and coprime mod p, to F = G*H mod p^k
// with G, H monic. F must be monic modulo p^k.
std::pair<ZPoly, ZPoly> hensel_lift_pair(const ZPoly& F, const ZpPoly& g0, const ZpPoly& h0,
                                         const Zp& Fp, unsigned k) {
  auto [one, s, t] = Fp.ext_gcd(g0, h0);
  ZPoly g = from_zp(g0), h = from_zp(h0);
  const mpz_class p(static_cast<unsigned long>(Fp.p));
  mpz_class pj = p;
  for (unsigned j = 1; j < k; ++j) {
    const mpz_class pj1 = pj * p;
    ZPoly diff = F;
    ZPoly gh = zmul(g, h);
    diff.resize(std::max(diff.size(), gh.size()), mpz_class(0));
    for (std::size_t i = 0; i < gh.size(); ++i) diff[i] -= gh[i];
    diff = zmod(diff, pj1);
    for (auto& c : diff) c /= pj;
    ZpPoly e = to_zp(diff, Fp);
    auto [quo, sigma] = Fp.divmod(Fp.mul(e, s), h0);
    ZpPoly tau = Fp.add(Fp.mul(e, t), Fp.mul(quo, g0));
    ZPoly zt = from_zp(tau), zs = from_zp(sigma);
    for (std::size_t i = 0; i < zt.size(); ++i) g[i] += pj * zt[i];
    for (std::size_t i = 0; i < zs.size(); ++i) h[i] += pj * zs[i];
    pj = pj1;
  }
  return {zmod(g, pj), zmod(h, pj)};
}

void hensel_lift_all(const ZPoly& F, const std::vector<ZpPoly>& factors, const Zp& Fp,
                     unsigned k, const mpz_class& pk, std::vector<ZPoly>& out) {
  if (factors.size() == 1) {
    out.push_back(zmod(F, pk));
    return;
  }
  const std::size_t half = factors.size() / 2;
  ZpPoly g0{1}, h0{1};
  for (std::size_t i = 0; i < half; ++i) g0 = Fp.mul(g0, factors[i]);
  for (std::size_t i = half; i < factors.size(); ++i) h0 = Fp.mul(h0, factors[i]);
  auto [G, H] = hensel_lift_pair(F, g0, h0, Fp, k);
  hensel_lift_all(G, {factors.begin(), factors.begin() + static_cast<std::ptrdiff_t>(half)}, Fp,
                  k, pk, out);
  hensel_lift_all(H, {factors.begin() + static_cast<std::ptrdiff_t>(half), factors.end()}, Fp,
                  k, pk, out);
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Exact division over Z; returns nullopt if b does not divide a.
std::optional<ZPoly> zdivide(const ZPoly& a, const ZPoly& b) {
  auto [q, r] = divmod(to_q(a), to_q(b));
  if (!r.is_zero()) return std::nullopt;
  ZPoly out;
  for (const auto& c : q.coeffs()) {
    if (!c.is_integer()) return std::nullopt;
    out.push_back(c.num());
  }
  return out;
}

// Factors a primitive squarefree integer polynomial of degree >= 2 with f(0) != 0.
std::vector<ZPoly> zassenhaus(const ZPoly& f) {
  const long n = static_cast<long>(f.size()) - 1;
  const mpz_class lc = f.back();

  // Choose among a few good primes the one giving the fewest modular factors.
  std::optional<Zp> best;
  std::vector<ZpPoly> best_factors;
  int good = 0;
  for (u64 p = 3; good < 3 && p < 100000; p += 2) {
    if (!is_prime(p)) continue;
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), lc.get_mpz_t(), p);
    if (r == 0) continue;
    Zp F{p};
    ZpPoly fp = to_zp(f, F);
    if (F.deg(F.gcd(fp, F.derivative(fp))) != 0) continue;
    ++good;
    auto fs = factor_mod_p(F, F.monic(fp));
    if (!best || fs.size() < best_factors.size()) {
      best = F;
      best_factors = std::move(fs);
    }
    if (best_factors.size() == 1) break;
  }
  if (!best) throw InternalError("no suitable prime for factorization");
  if (best_factors.size() == 1) return {f};

  // Coefficient bound for lc * (any factor): |lc| * 2^n * ||f||_2.
  mpz_class norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  mpz_class bound = sqrt(norm2) + 1;
  bound <<= static_cast<mp_bitcnt_t>(n);
  bound *= abs(lc);
  bound *= 2;
  const mpz_class p(static_cast<unsigned long>(best->p));
  unsigned k = 1;
  mpz_class pk = p;
  while (pk <= bound) {
    pk *= p;
    ++k;
  }

  // Monic image lc^{-1} f mod p^k.
  mpz_class lcinv;
  mpz_invert(lcinv.get_mpz_t(), lc.get_mpz_t(), pk.get_mpz_t());
  ZPoly monic_f = f;
  for (auto& c : monic_f) c *= lcinv;
  monic_f = zmod(monic_f, pk);

  std::vector<ZPoly> lifted;
  hensel_lift_all(monic_f, best_factors, *best, k, pk, lifted);

  std::vector<ZPoly> result;
  ZPoly rest = f;
  std::vector<ZPoly> u = lifted;
  std::size_t size = 1;
  while (2 * size <= u.size()) {
    bool found = false;
    std::vector<std::size_t> idx(size);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
      ZPoly g{rest.back()};
      for (std::size_t i : idx) g = zmod(zmul(g, u[i]), pk);
      g = primitive_part(zsymmetric(g, pk));
      if (auto q = zdivide(rest, g)) {
        result.push_back(g);
        rest = *q;
        for (std::size_t i = idx.size(); i-- > 0;) u.erase(u.begin() + static_cast<std::ptrdiff_t>(idx[i]));
        found = true;
        break;
      }
      // Next combination of `size` indices out of u.size().
      std::size_t i = size;
      while (i > 0 && idx[i - 1] == u.size() - size + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++size;
  }
  if (rest.size() > 1) result.push_back(primitive_part(rest));
  return result;
}

std::vector<QPoly> factor_squarefree(const QPoly& a) {
  if (a.degree() <= 1) return {a.monic()};
  ZPoly f = to_primitive_z(a);
  std::vector<QPoly> out;
  if (f[0] == 0) {
    out.push_back(QPoly::variable());
    f.erase(f.begin());
  }
  if (f.size() == 2) {
    out.push_back(to_q(f).monic());
  } else if (f.size() > 2) {
    for (const auto& g : zassenhaus(f)) out.push_back(to_q(g).monic());
  }
  return out;
}

bool poly_less(const QPoly& a, const QPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t i = a.coeffs().size(); i-- > 0;) {
    if (!(a.coeffs()[i] == b.coeffs()[i])) return a.coeffs()[i] < b.coeffs()[i];
  }
  return false;
}

}  // namespace

std::vector<FactorPower> squarefree_decomposition(const QPoly& p) {
  if (p.is_zero()) throw PreconditionError("squarefree decomposition of zero");
  std::vector<FactorPower> out;
  if (p.degree() == 0) return out;
  const QPoly f = p.monic();
  const QPoly fp = f.derivative();
  QPoly a = gcd(f, fp);
  QPoly b = f / a;
  QPoly c = fp / a;
  QPoly d = c - b.derivative();
  for (unsigned i = 1; b.degree() > 0; ++i) {
    QPoly ai = gcd(b, d);
    b = b / ai;
    c = d / ai;
    d = c - b.derivative();
    if (ai.degree() > 0) out.push_back({ai, i});
  }
  return out;
}

std::vector<FactorPower> factor(const QPoly& p) {
  std::vector<FactorPower> out;
  for (const auto& [part, mult] : squarefree_decomposition(p)) {
    for (auto& g : factor_squarefree(part)) out.push_back({std::move(g), mult});
  }
  std::sort(out.begin(), out.end(),
            [](const FactorPower& a, const FactorPower& b) { return poly_less(a.factor, b.factor); });
  return out;
}

bool is_irreducible(const QPoly& p) {
  if (p.degree() < 1) return false;
  auto f = factor(p);
  return f.size() == 1 && f.front().multiplicity == 1;
}

std::vector<Rational> rational_roots(const QPoly& p) {
  std::vector<Rational> roots;
  for (const auto& fp : factor(p)) {
    if (fp.factor.degree() == 1) roots.push_back(-fp.factor.coeffs()[0]);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace precint
