#include "support.hpp"

#include "precint/errors.hpp"
#include "precint/parse.hpp"
#include <map>

#include "precint/valuation.hpp"

namespace precint::test {

OreOperator example_operator() { return parse_operator("(x+2)^2 + x*S^2 + (x+2)*S^3"); }

BasisMatrix basis_of(const std::vector<std::string>& rows, std::size_t r) {
  BasisMatrix b;
  for (const auto& s : rows) b.rows.push_back(parse_element(s, r));
  return b;
}

BasisMatrix example_local_basis() { return basis_of({"1", "(x-2)/x^2 + (1/x)*S", "-2/x + S^2"}, 3); }

BasisMatrix example_global_basis() {
  return basis_of({"1", "(x-2)/x^2 + (1/x)*S", "(-x+2)/x^2 + (-3*x-1)/(x*(x+1)^2)*S + 1/(x+1)*S^2"}, 3);
}

QRational qr(const std::string& num, const std::string& den) {
  // Parse in x, then read x as q.
  auto to_q = [](const std::string& s) {
    const RationalFunction f = parse_rational_function(s);
    if (!f.is_polynomial()) throw PreconditionError("expected a polynomial");
    return lift(f.num());
  };
  return QRational(to_q(num), to_q(den));
}

AlgebraicPoint at(long n) { return AlgebraicPoint::rational(Rational(n)); }

GlobalResult global_with_auto_bounds(const OreOperator& l, bool rational_only) {
  ZSpec z;
  z.rational_only = rational_only;
  const OreOperator n = normalize(l);
  for (int guard = 0; guard < 64; ++guard) {
    try {
      return global_integral_basis(l, z);
    } catch (const MissingRightBound& e) {
      for (const auto& orbit : singular_orbits(n)) {
        if (orbit.orbit_key() == e.orbit()) z.right_bounds[e.orbit()] = OrbitAnalysis(n, orbit).right_end();
      }
    }
  }
  throw InternalError("could not complete the right bounds");
}

std::vector<std::vector<QRational>> unroll_integer_orbit(const OreOperator& l, long anchor, long lo,
                                                        long hi) {
  const OreOperator n = normalize(l);
  const long r = n.order();
  auto c = [&](long i, long w) { return QRational(eval_shifted(n.coeff(static_cast<std::size_t>(i)).num(), NFElem(w))); };
  std::vector<std::vector<QRational>> out(static_cast<std::size_t>(r));
  for (long j = 0; j < r; ++j) {
    std::map<long, QRational> f;
    for (long i = 0; i < r; ++i) f[anchor + i] = QRational(i == j ? 1 : 0);
    for (long w = anchor; w + r <= hi; ++w) {
      QRational s;
      for (long i = 0; i < r; ++i) s += c(i, w) * f[w + i];
      f[w + r] = -s / c(r, w);
    }
    for (long w = anchor - 1; w >= lo; --w) {
      QRational s;
      for (long i = 1; i <= r; ++i) s += c(i, w) * f[w + i];
      f[w] = -s / c(0, w);
    }
    for (long k = lo; k <= hi; ++k) out[static_cast<std::size_t>(j)].push_back(f.at(k));
  }
  return out;
}

}  // namespace precint::test
