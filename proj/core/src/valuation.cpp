#include "precint/valuation.hpp"

#include <algorithm>
#include <limits>

#include "precint/factor.hpp"

namespace precint {
namespace {

std::vector<long> roots_on_orbit(const QPoly& p, const QPoly& rep) {
  std::vector<long> out;
  if (p.degree() < 1) return out;
  for (const auto& f : factor(p)) {
    if (auto n = integer_shift(rep, f.factor)) out.push_back(*n);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

const QPoly& leading_poly(const OreOperator& l) { return l.coeffs().back().num(); }
const QPoly& trailing_poly(const OreOperator& l) { return l.coeffs().front().num(); }

void check_normalized(const OreOperator& l) {
  if (l.order() < 1 || !l.has_polynomial_coeffs() || l.coeffs().front().is_zero()) {
    throw PreconditionError("operator must be normalized with l_0, l_r nonzero and order >= 1");
  }
}

}  // namespace

SingularPoints singular_points(const OreOperator& l, const AlgebraicPoint& orbit) {
  check_normalized(l);
  SingularPoints s;
  const QPoly& rep = orbit.min_poly();
  s.leftward = roots_on_orbit(trailing_poly(l), rep);
  s.leading = roots_on_orbit(leading_poly(l), rep);
  for (long n : s.leading) s.rightward.push_back(n + l.order());
  return s;
}

long default_anchor(const OreOperator& l, const AlgebraicPoint& orbit) {
  const SingularPoints s = singular_points(l, orbit);
  long a = std::numeric_limits<long>::max();
  for (long n : s.leftward) a = std::min(a, n);
  for (long n : s.leading) a = std::min(a, n);
  return a == std::numeric_limits<long>::max() ? 0 : a;
}

std::vector<AlgebraicPoint> singular_orbits(const OreOperator& l) {
  check_normalized(l);
  std::vector<QPoly> reps;
  auto add = [&](const QPoly& f) {
    if (f.degree() == 1 && (-f.coeff(0)).is_integer()) {
      const QPoly x = QPoly::variable();
      if (std::find(reps.begin(), reps.end(), x) == reps.end()) reps.push_back(x);
      return;
    }
    for (auto& rep : reps) {
      if (auto n = integer_shift(rep, f)) {
        if (*n < 0) rep = f;  // f's roots lie further left
        return;
      }
    }
    reps.push_back(f);
  };
  for (const auto& f : factor(trailing_poly(l))) add(f.factor);
  for (const auto& f : factor(leading_poly(l))) add(f.factor);
  std::vector<AlgebraicPoint> out;
  for (auto& rep : reps) out.emplace_back(rep, 0);
  std::sort(out.begin(), out.end(), [](const AlgebraicPoint& a, const AlgebraicPoint& b) {
    return a.orbit_key() < b.orbit_key();
  });
  return out;
}

AlgebraicPoint locate(const OreOperator& l, const AlgebraicPoint& point) {
  for (const auto& rep : singular_orbits(l)) {
    if (auto n = integer_shift(rep.min_poly(), point.min_poly())) {
      return rep.with_offset(*n + point.offset());
    }
  }
  return point;
}

SolutionBasis anchored_basis(const OreOperator& l, const AlgebraicPoint& orbit) {
  return SolutionBasis(l, orbit.with_offset(0), default_anchor(l, orbit));
}

OrbitAnalysis::OrbitAnalysis(const OreOperator& l, const AlgebraicPoint& orbit,
                             std::optional<long> anchor)
    : orbit_(orbit.with_offset(0)),
      singular_(singular_points(l, orbit_)),
      basis_(l, orbit_, default_anchor(l, orbit_)) {
  const long def = basis_.anchor();
  if (anchor) {
    if (*anchor > def) {
      throw PreconditionError("anchor " + std::to_string(*anchor) +
                              " lies right of the default anchor " + std::to_string(def));
    }
    basis_ = SolutionBasis(l, orbit_, *anchor);
  }
  left_end_ = def;
  right_end_ = def;
  for (long n : singular_.leftward) right_end_ = std::max(right_end_, n);
  for (long n : singular_.rightward) right_end_ = std::max(right_end_, n);

  const std::size_t r = basis_.order();
  growths_.assign(r, 0);
  if (!has_singular_points()) return;
  for (std::size_t j = 0; j < r; ++j) {
    std::vector<QRational> c(r);
    c[j] = QRational(1);
    growths_[j] = growth_of(c);
  }
}

bool OrbitAnalysis::has_nonzero_growth() const {
  return std::any_of(growths_.begin(), growths_.end(), [](long g) { return g != 0; });
}

ExtInt OrbitAnalysis::window_min(const std::vector<QRational>& c, long start) {
  ExtInt m = ExtInt::infinity();
  for (long n = start; n < start + static_cast<long>(basis_.order()); ++n) {
    QFraction v;
    for (std::size_t j = 0; j < c.size(); ++j) v.add_product(c[j], basis_.fraction(j, n));
    m = min(m, nu_q(v));
  }
  return m;
}

long OrbitAnalysis::growth_of(const std::vector<QRational>& c) {
  if (!has_singular_points()) return 0;
  const long r = static_cast<long>(basis_.order());
  const ExtInt right = window_min(c, right_end_ + 1);
  const ExtInt left = window_min(c, left_end_ - r);
  if (right.is_infinite() || left.is_infinite()) return 0;  // zero solution
  return right.value() - left.value();
}

ExtInt val_at(const QuotientElement& b, const AlgebraicPoint& point, OrbitAnalysis& analysis) {
  if (!(point.min_poly() == analysis.orbit().min_poly())) {
    throw PreconditionError("point " + point.to_string() + " is not on the analysed orbit");
  }
  if (b.is_zero()) return ExtInt::infinity();
  ExtInt v = ExtInt::infinity();
  for (std::size_t j = 0; j < analysis.basis().order(); ++j) {
    v = min(v, nu_q(apply_element_fraction(b, analysis.basis(), j, point.offset())));
  }
  return v;
}

long valuation_growth(const OrbitAnalysis& analysis, std::size_t j) {
  return analysis.growths().at(j);
}

std::vector<WorklistEntry> worklist(const OreOperator& l, const ZSpec& zspec) {
  std::vector<WorklistEntry> out;
  for (const auto& orbit : singular_orbits(l)) {
    if (zspec.rational_only && !orbit.is_rational()) continue;
    OrbitAnalysis analysis(l, orbit);
    const auto bound = zspec.bound_for(orbit.orbit_key());
    long upper = analysis.right_end();
    if (analysis.has_nonzero_growth()) {
      if (!bound) {
        std::string diag = "basis solution growths (";
        for (std::size_t j = 0; j < analysis.growths().size(); ++j) {
          diag += (j ? ", " : "") + std::to_string(analysis.growths()[j]);
        }
        throw MissingRightBound(orbit.orbit_key(), diag + ") are not all zero");
      }
      upper = *bound;
    } else if (bound) {
      upper = std::min(upper, *bound);
    }
    WorklistEntry e{orbit, {}, analysis.growths()};
    for (long n = analysis.left_end(); n <= upper; ++n) e.points.push_back(n);
    if (!e.points.empty()) out.push_back(std::move(e));
  }
  return out;
}

}  // namespace precint
