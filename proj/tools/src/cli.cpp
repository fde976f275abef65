#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "precint/errors.hpp"
#include "precint/integral_basis.hpp"
#include "precint/parse.hpp"
#include "precint/shift_space.hpp"
#include "precint/solutions.hpp"
#include "precint/valuation.hpp"
#include "precint/verify.hpp"

namespace precint::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string format = "text";
  std::string op;
  std::string orbit;
  std::string at;
  std::string element;
  std::string basis_file;
  std::vector<std::string> rows;
  std::vector<std::string> bounds;
  bool rational_only = false;
  long from = 0;
  long to = 0;
  std::optional<long> anchor;
  std::size_t samples = 20;
  std::uint64_t seed = 1;
  long window = 8;
};

bool json_mode(const Options& o) { return o.format == "json"; }

Json ext_json(ExtInt v) { return v.is_infinite() ? Json("inf") : Json(v.value()); }

Json rf_json(const RationalFunction& f) {
  return Json{{"num", to_string(f.num(), "x")}, {"den", to_string(f.den(), "x")}};
}

Json q_json(const QRational& f) {
  return Json{{"num", to_string(f.num(), "q")}, {"den", to_string(f.den(), "q")}};
}

Json basis_json(const BasisMatrix& b) {
  Json rows = Json::array();
  for (const auto& row : b.rows) {
    Json r = Json::array();
    for (const auto& c : row.coords()) r.push_back(rf_json(c));
    rows.push_back(r);
  }
  return rows;
}

void print_basis(std::ostream& out, const BasisMatrix& b) {
  for (std::size_t i = 0; i < b.size(); ++i) out << "B_" << i + 1 << " = " << to_string(b.rows[i]) << "\n";
}

RationalFunction read_entry(const Json& e) {
  const auto num = parse_rational_function(e.at("num").get<std::string>());
  const auto den = parse_rational_function(e.at("den").get<std::string>());
  return num / den;
}

BasisMatrix read_basis(const std::string& path, std::size_t r) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open basis file " + path);
  Json j;
  try {
    j = Json::parse(in);
    BasisMatrix b;
    for (const auto& row : j.at("basis")) {
      if (row.size() != r) throw PreconditionError("basis row has the wrong length in " + path);
      std::vector<RationalFunction> c;
      for (const auto& e : row) c.push_back(read_entry(e));
      b.rows.emplace_back(std::move(c));
    }
    if (b.size() != r) throw PreconditionError("basis file must hold " + std::to_string(r) + " rows");
    return b;
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionError("malformed basis file " + path + ": " + e.what());
  }
}

std::string canonical_orbit_key(const std::string& key) {
  if (key == "Z") return key;
  const RationalFunction p = parse_rational_function(key);
  if (!p.is_polynomial() || p.num().degree() < 1) throw PreconditionError("bad orbit key '" + key + "'");
  return to_string(p.num().monic(), "x");
}

ZSpec build_zspec(const Options& o) {
  ZSpec z;
  z.rational_only = o.rational_only;
  for (const auto& b : o.bounds) {
    const auto eq = b.rfind('=');
    if (eq == std::string::npos) throw PreconditionError("right bound must look like ORBIT=R, got '" + b + "'");
    const std::string value = b.substr(eq + 1);
    std::size_t used = 0;
    long r = 0;
    try {
      r = std::stol(value, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != value.size()) throw PreconditionError("right bound must be an integer, got '" + value + "'");
    z.right_bounds[canonical_orbit_key(b.substr(0, eq))] = r;
  }
  return z;
}

OreOperator read_operator(const Options& o) {
  const OreOperator l = parse_operator(o.op);
  if (l.order() < 1) throw PreconditionError("operator must have order at least 1");
  if (l.coeff(0).is_zero()) throw PreconditionError("operator must have nonzero l_0");
  return l;
}

Json report_json(const CertificateReport& rep) {
  Json v = Json::array();
  for (const auto& x : rep.violations) v.push_back(Json{{"sample", x.sample}, {"exponents", x.exponents}, {"val", ext_json(x.val)}});
  Json rows = Json::array();
  for (auto r : rep.row_vals) rows.push_back(ext_json(r));
  return Json{{"point", rep.point}, {"seed", rep.seed}, {"samples", rep.samples}, {"row_vals", rows}, {"violations", v}};
}

bool integral_and_clean(const CertificateReport& rep) {
  if (!rep.clean()) return false;
  for (auto v : rep.row_vals)
    if (v < ExtInt(0)) return false;
  return true;
}

int cmd_solutions(const Options& o, std::ostream& out) {
  const OreOperator l = normalize(read_operator(o));
  if (o.from > o.to) throw PreconditionError("--from must not exceed --to");
  const AlgebraicPoint orbit = parse_point(o.orbit).with_offset(0);
  const long anchor = o.anchor ? *o.anchor : default_anchor(l, orbit);
  SolutionBasis basis(l, orbit, anchor);
  if (json_mode(o)) {
    Json sols = Json::array();
    for (std::size_t j = 0; j < basis.order(); ++j) {
      Json row = Json::array();
      for (long n = o.from; n <= o.to; ++n) row.push_back(q_json(basis.value(j, n)));
      sols.push_back(row);
    }
    out << Json{{"orbit", orbit.orbit_key()}, {"anchor", anchor}, {"from", o.from}, {"to", o.to}, {"solutions", sols}}.dump(2) << "\n";
    return kOk;
  }
  out << "orbit " << orbit.orbit_key() << ", anchor " << anchor << ", offsets " << o.from << ".." << o.to << "\n";
  for (std::size_t j = 0; j < basis.order(); ++j) {
    out << "b_" << j + 1 << ":";
    for (long n = o.from; n <= o.to; ++n) out << (n == o.from ? " " : " | ") << to_string(basis.value(j, n));
    out << "\n";
  }
  return kOk;
}

int cmd_val(const Options& o, std::ostream& out) {
  const OreOperator l = normalize(read_operator(o));
  const QuotientElement b = parse_element(o.element, static_cast<std::size_t>(l.order()));
  const AlgebraicPoint at = parse_point(o.at);
  ExtInt v;
  if (o.anchor) {
    const AlgebraicPoint p = locate(l, at);
    OrbitAnalysis an(l, p.with_offset(0), o.anchor);
    v = val_at(b, p, an);
  } else {
    ShiftSpace space(l);
    v = space.val(b, at);
  }
  if (json_mode(o)) {
    out << Json{{"point", at.to_string()}, {"element", to_string(b)}, {"val", ext_json(v)}}.dump(2) << "\n";
  } else {
    out << v << "\n";
  }
  return kOk;
}

int cmd_growth(const Options& o, std::ostream& out) {
  const OreOperator l = normalize(read_operator(o));
  const AlgebraicPoint orbit = locate(l, parse_point(o.orbit)).with_offset(0);
  OrbitAnalysis an(l, orbit, o.anchor);
  if (json_mode(o)) {
    out << Json{{"orbit", orbit.orbit_key()},
                {"anchor", an.basis().anchor()},
                {"left_end", an.left_end()},
                {"right_end", an.right_end()},
                {"growths", an.growths()}}
               .dump(2)
        << "\n";
    return kOk;
  }
  out << "orbit " << orbit.orbit_key() << ", anchor " << an.basis().anchor() << ", singular offsets "
      << an.left_end() << ".." << an.right_end() << "\n";
  for (std::size_t j = 0; j < an.growths().size(); ++j) out << "b_" << j + 1 << ": " << an.growths()[j] << "\n";
  return kOk;
}

int cmd_local_basis(const Options& o, std::ostream& out) {
  const OreOperator l = read_operator(o);
  ShiftSpace space(l);
  const AlgebraicPoint at = parse_point(o.at);
  const BasisMatrix input = o.basis_file.empty() ? BasisMatrix::standard(space.dimension())
                                                 : read_basis(o.basis_file, space.dimension());
  const LocalResult res = local_integral_basis(space, input, at);
  const CertificateReport rep = certificate(space.modulus(), res.basis, at, o.samples, o.seed, o.window);
  const bool ok = integral_and_clean(rep);
  if (json_mode(o)) {
    Json verified = Json::array();
    if (ok) verified.push_back(at.to_string());
    Json j{{"order", space.dimension()}, {"basis", basis_json(res.basis)}, {"verified_points", verified},
           {"point", at.to_string()}, {"updates", res.updates}};
    if (res.initial_disc) j["initial_disc"] = *res.initial_disc;
    if (res.final_disc) j["final_disc"] = *res.final_disc;
    out << j.dump(2) << "\n";
  } else {
    print_basis(out, res.basis);
    out << "updates: " << res.updates;
    if (res.initial_disc && res.final_disc) out << " (Disc " << *res.initial_disc << " -> " << *res.final_disc << ")";
    out << "\n" << (ok ? "verified: " : "verification failed: ") << at.to_string() << "\n";
  }
  return ok ? kOk : kVerificationFailed;
}

int cmd_global_basis(const Options& o, std::ostream& out) {
  const OreOperator l = read_operator(o);
  const GlobalResult res = global_integral_basis(l, build_zspec(o));
  const OreOperator ln = normalize(l);
  std::vector<std::string> verified, failed;
  for (const auto& run : res.runs) {
    const auto rep = certificate(ln, res.basis, run.point, o.samples, o.seed, o.window);
    (integral_and_clean(rep) ? verified : failed).push_back(run.point.to_string());
  }
  if (json_mode(o)) {
    Json wl = Json::array();
    for (const auto& e : res.worklist) wl.push_back(Json{{"orbit", e.orbit.orbit_key()}, {"points", e.points}, {"growths", e.growths}});
    out << Json{{"order", ln.order()}, {"basis", basis_json(res.basis)}, {"verified_points", verified}, {"worklist", wl}}.dump(2)
        << "\n";
  } else {
    print_basis(out, res.basis);
    for (const auto& e : res.worklist) {
      out << "orbit " << e.orbit.orbit_key() << ":";
      for (long p : e.points) out << " " << p;
      out << "\n";
    }
    out << "verified:";
    for (const auto& p : verified) out << " " << p;
    out << "\n";
    for (const auto& p : failed) out << "verification failed: " << p << "\n";
  }
  return failed.empty() ? kOk : kVerificationFailed;
}

int cmd_discriminant(const Options& o, std::ostream& out) {
  const OreOperator l = read_operator(o);
  ShiftSpace space(l);
  const AlgebraicPoint at = parse_point(o.at);
  BasisMatrix b;
  if (!o.basis_file.empty()) {
    b = read_basis(o.basis_file, space.dimension());
  } else if (!o.rows.empty()) {
    for (const auto& r : o.rows) b.rows.push_back(parse_element(r, space.dimension()));
    if (b.size() != space.dimension()) throw PreconditionError("give one --row per basis element");
  } else {
    b = BasisMatrix::standard(space.dimension());
  }
  const long d = *space.discriminant(b.rows, at);
  if (json_mode(o)) {
    out << Json{{"point", at.to_string()}, {"discriminant", d}}.dump(2) << "\n";
  } else {
    out << d << "\n";
  }
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const OreOperator l = read_operator(o);
  const OreOperator ln = normalize(l);
  const GlobalResult computed = global_integral_basis(l, build_zspec(o));
  const bool external = !o.basis_file.empty();
  const BasisMatrix basis = external ? read_basis(o.basis_file, static_cast<std::size_t>(ln.order())) : computed.basis;
  bool clean = true;
  Json points = Json::array();
  std::ostringstream text;
  for (const auto& run : computed.runs) {
    const auto rep = certificate(ln, basis, run.point, o.samples, o.seed, o.window);
    bool ok = integral_and_clean(rep);
    bool equal = true;
    if (external) {
      try {
        equal = module_equal_at(basis, computed.basis, run.point);
      } catch (const SingularTransition&) {
        equal = false;
      }
    }
    clean = clean && ok && equal;
    Json pj = report_json(rep);
    if (external) pj["module_equal"] = equal;
    points.push_back(pj);
    text << "point " << rep.point << ": " << rep.samples << " samples, " << rep.violations.size() << " violations";
    for (auto v : rep.row_vals)
      if (v < ExtInt(0)) text << ", row of negative value";
    if (external) text << ", module-equal " << (equal ? "yes" : "no");
    text << "\n";
  }
  if (json_mode(o)) {
    out << Json{{"seed", o.seed}, {"samples", o.samples}, {"points", points}, {"clean", clean}}.dump(2) << "\n";
  } else {
    if (computed.runs.empty()) out << "no worklist points\n";
    out << text.str() << (clean ? "clean" : "violations found") << "\n";
  }
  return clean ? kOk : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Integral bases of shift-operator quotients", "precint"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* c) {
    c->add_option("--operator,-L", o.op, "operator in x and S")->required();
    c->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
  };
  auto certify = [&](CLI::App* c, std::size_t samples) {
    o.samples = samples;
    c->add_option("--samples", o.samples, "certificate samples per point");
    c->add_option("--seed", o.seed, "certificate seed");
    c->add_option("--window", o.window, "extra offsets for the brute-force oracle");
  };
  auto zspec = [&](CLI::App* c) {
    c->add_option("--right-bound", o.bounds, "ORBIT=R; repeatable");
    c->add_flag("--rational-only", o.rational_only, "restrict Z to rational points");
  };

  auto* sol = app.add_subcommand("solutions", "anchored solution table");
  common(sol);
  sol->add_option("--orbit", o.orbit, "point naming the orbit")->required();
  sol->add_option("--from", o.from)->required();
  sol->add_option("--to", o.to)->required();
  sol->add_option("--anchor", o.anchor);

  auto* val = app.add_subcommand("val", "value function at a point");
  common(val);
  val->add_option("--element,-B", o.element)->required();
  val->add_option("--at", o.at)->required();
  val->add_option("--anchor", o.anchor);

  auto* growth = app.add_subcommand("growth", "valuation growth of the anchored solutions");
  common(growth);
  growth->add_option("--orbit", o.orbit)->required();
  growth->add_option("--anchor", o.anchor);

  auto* local = app.add_subcommand("local-basis", "local integral basis at a point");
  common(local);
  local->add_option("--at", o.at)->required();
  local->add_option("--basis", o.basis_file, "JSON file with the input basis");
  certify(local, 20);

  auto* global = app.add_subcommand("global-basis", "integral basis on the admissible set");
  common(global);
  zspec(global);
  certify(global, 20);

  auto* disc = app.add_subcommand("discriminant", "discriminant of a basis at a point");
  common(disc);
  disc->add_option("--at", o.at)->required();
  disc->add_option("--basis", o.basis_file, "JSON file with the basis");
  disc->add_option("--row", o.rows, "basis element; repeat once per row");

  auto* ver = app.add_subcommand("verify", "certify a basis at every worklist point");
  common(ver);
  zspec(ver);
  ver->add_option("--basis", o.basis_file, "JSON file with the basis to check");
  certify(ver, 200);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (sol->parsed()) return cmd_solutions(o, out);
    if (val->parsed()) return cmd_val(o, out);
    if (growth->parsed()) return cmd_growth(o, out);
    if (local->parsed()) return cmd_local_basis(o, out);
    if (global->parsed()) return cmd_global_basis(o, out);
    if (disc->parsed()) return cmd_discriminant(o, out);
    if (ver->parsed()) return cmd_verify(o, out);
  } catch (const MissingRightBound& e) {
    err << "error: " << e.what() << "\n";
    return kMissingRightBound;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kVerificationFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace precint::cli
