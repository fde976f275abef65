#include "precint/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "precint/errors.hpp"
#include "precint/factor.hpp"
#include "precint/linalg.hpp"
#include "precint/valuation.hpp"

namespace precint {

BruteForceOracle::BruteForceOracle(const OreOperator& l, const AlgebraicPoint& point, long window)
    : point_(point) {
  const OreOperator n = normalize(l);
  if (n.order() < 1) throw PreconditionError("operator must have order at least 1");
  r_ = static_cast<std::size_t>(n.order());
  const AlgebraicPoint orbit = locate(n, point);
  const long def = default_anchor(n, orbit);
  anchor_ = std::min(def, orbit.offset()) - std::max(window, 0L);
  const long target = orbit.offset();
  const NFElem rho = orbit.root();

  // f_j(anchor + i) = delta_ij, then march right to target + r - 1.
  std::vector<std::vector<QRational>> f(r_);
  for (std::size_t j = 0; j < r_; ++j)
    for (std::size_t i = 0; i < r_; ++i) f[j].push_back(QRational(i == j ? 1 : 0));
  const long last = target + static_cast<long>(r_) - 1;
  for (long w = anchor_; w + static_cast<long>(r_) <= last; ++w) {
    const NFElem at = rho + NFElem(w);
    std::vector<QRational> c;
    for (std::size_t i = 0; i <= r_; ++i) c.emplace_back(eval_shifted(n.coeff(i).num(), at));
    const std::size_t base = static_cast<std::size_t>(w - anchor_);
    for (std::size_t j = 0; j < r_; ++j) {
      QRational s;
      for (std::size_t i = 0; i < r_; ++i) s += c[i] * f[j][base + i];
      f[j].push_back(-s / c[r_]);
    }
  }
  values_.resize(r_);
  const std::size_t start = static_cast<std::size_t>(target - anchor_);
  for (std::size_t j = 0; j < r_; ++j)
    values_[j].assign(f[j].begin() + static_cast<long>(start),
                      f[j].begin() + static_cast<long>(start + r_));
  point_ = orbit;
}

std::vector<QFraction> BruteForceOracle::evaluate(const QuotientElement& b) const {
  if (b.dimension() != r_) throw PreconditionError("element has the wrong dimension");
  const NFElem at = point_.value();
  std::vector<QRational> coeffs;
  for (std::size_t i = 0; i < r_; ++i) coeffs.push_back(eval_shifted(b[i], at));
  std::vector<QFraction> out(r_);
  for (std::size_t j = 0; j < r_; ++j)
    for (std::size_t i = 0; i < r_; ++i) out[j].add_product(coeffs[i], values_[j][i]);
  return out;
}

ExtInt BruteForceOracle::val(const QuotientElement& b) const {
  ExtInt v = ExtInt::infinity();
  for (const auto& f : evaluate(b)) v = min(v, nu_q(f));
  return v;
}

ExtInt brute_val(const QuotientElement& b, const AlgebraicPoint& point, const OreOperator& l,
                 long window) {
  if (b.is_zero()) return ExtInt::infinity();
  return BruteForceOracle(l, point, window).val(b);
}

bool module_equal_at(const BasisMatrix& a, const BasisMatrix& b, const AlgebraicPoint& z) {
  if (a.size() != b.size()) throw SingularTransition("bases of different sizes");
  const Matrix<RationalFunction> t = a.coordinates() * inverse(b.coordinates());
  // A singular A also means the spans differ.
  const RationalFunction det = determinant(t);
  if (det.is_zero()) throw SingularTransition("bases span different spaces");
  for (std::size_t i = 0; i < t.rows(); ++i)
    for (std::size_t j = 0; j < t.cols(); ++j)
      if (nu_at(t(i, j), z) < ExtInt(0)) return false;
  return nu_at(det, z) == ExtInt(0);
}

namespace {

using Rng = std::mt19937_64;

long draw(Rng& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

QPoly random_poly(Rng& rng, int max_degree, long height) {
  std::vector<Rational> c;
  for (int i = 0; i <= max_degree; ++i) c.emplace_back(draw(rng, -height, height));
  return QPoly(std::move(c));
}

// A random f with nu_z(f) = 0.
RationalFunction random_unit(Rng& rng, const QPoly& norm) {
  while (true) {
    const QPoly num = random_poly(rng, 1, 4), den = random_poly(rng, 1, 4);
    if (num.is_zero() || den.is_zero()) continue;
    const RationalFunction u(num, den);
    if (multiplicity(u, norm) == ExtInt(0)) return u;
  }
}

}  // namespace

CertificateReport certificate(const OreOperator& l, const BasisMatrix& basis,
                              const AlgebraicPoint& z, std::size_t samples, std::uint64_t seed,
                              long window) {
  CertificateReport rep;
  rep.point = z.to_string();
  rep.seed = seed;
  rep.samples = samples;
  const BruteForceOracle oracle(l, z, window);
  const std::size_t d = basis.size();
  if (d == 0) throw PreconditionError("certificate of an empty basis");

  // v[k][j]: expansion of (B_k.b_j)(z) through q^1, enough for exponents >= -2.
  std::vector<std::vector<QExpansion>> v(d);
  std::vector<long> vmin(d, 0);
  for (std::size_t k = 0; k < d; ++k) {
    ExtInt m = ExtInt::infinity();
    for (const auto& f : oracle.evaluate(basis.rows[k])) {
      v[k].push_back(q_expand(f, 1));
      m = min(m, nu_q(f));
    }
    rep.row_vals.push_back(m);
    if (m.is_infinite()) throw PreconditionError("certificate of a basis with a zero row");
    vmin[k] = m.value();
  }
  if (samples == 0) return rep;

  const RationalFunction norm(galois_norm_uniformizer(z));
  const NFElem zv = z.value();
  Rng rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    std::vector<long> e(d);
    std::vector<RationalFunction> a(d);
    std::vector<QExpansion> ax(d);
    bool integral = true;
    long lo = 0;
    for (std::size_t k = 0; k < d; ++k) {
      e[k] = draw(rng, -2, 2);
      integral = integral && e[k] >= 0;
      a[k] = random_unit(rng, norm.num()) * norm.pow(e[k]);
      ax[k] = q_expand(eval_shifted(a[k], zv), -1 - vmin[k]);
      lo = std::min(lo, e[k] + vmin[k]);
    }
    // val(x) < 0 iff some (x.b_j)(z) has a nonzero coefficient below q^0.
    bool negative = false;
    for (std::size_t j = 0; j < v.front().size() && !negative; ++j) {
      for (long m = lo; m < 0 && !negative; ++m) {
        NFElem c;
        for (std::size_t k = 0; k < d; ++k) {
          for (long t = e[k]; t <= m - vmin[k]; ++t) {
            const NFElem at = ax[k].coeff(t);
            if (!at.is_zero()) c += at * v[k][j].coeff(m - t);
          }
        }
        negative = !c.is_zero();
      }
    }
    if (negative == integral) {
      QuotientElement x = QuotientElement::zero(basis.rows.front().dimension());
      for (std::size_t k = 0; k < d; ++k) x += basis.rows[k].scaled(a[k]);
      rep.violations.push_back({s, std::move(e), oracle.val(x)});
    }
  }
  return rep;
}

std::string to_string(const CertificateReport& report) {
  std::ostringstream os;
  os << "certificate at " << report.point << " seed " << report.seed << ": " << report.samples
     << " samples, " << report.violations.size() << " violations";
  os << "\n  row values:";
  for (const auto& v : report.row_vals) os << ' ' << v;
  for (const auto& v : report.violations) {
    os << "\n  sample " << v.sample << " exponents (";
    for (std::size_t i = 0; i < v.exponents.size(); ++i) os << (i ? ", " : "") << v.exponents[i];
    os << ") val " << v.val;
  }
  return os.str();
}

OreOperator random_operator(const RandomOperatorSpec& spec) {
  if (spec.order < 1 || spec.order > 3) throw PreconditionError("random operator order must be 1..3");
  if (spec.max_degree < 0 || spec.height < 1) throw PreconditionError("bad random operator bounds");
  Rng rng(spec.seed);
  while (true) {
    std::vector<RationalFunction> c;
    for (int i = 0; i <= spec.order; ++i) c.emplace_back(random_poly(rng, spec.max_degree, spec.height));
    const QPoly& l0 = c.front().num();
    const QPoly& lr = c.back().num();
    if (l0.is_zero() || lr.is_zero()) continue;
    if (spec.no_rational_roots && (!rational_roots(l0).empty() || !rational_roots(lr).empty())) continue;
    return OreOperator(std::move(c));
  }
}

QuotientElement random_element(std::size_t r, std::uint64_t seed, int max_degree, long height) {
  Rng rng(seed);
  std::vector<RationalFunction> c;
  for (std::size_t i = 0; i < r; ++i) {
    const QPoly num = random_poly(rng, max_degree, height);
    QPoly den = random_poly(rng, 1, height);
    if (den.is_zero()) den = QPoly(Rational(1));
    c.emplace_back(num, den);
  }
  return QuotientElement(std::move(c));
}

}  // namespace precint
