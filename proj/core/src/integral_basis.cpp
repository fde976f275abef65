#include "precint/integral_basis.hpp"

#include <cstdlib>
#include <string>

#include "precint/errors.hpp"
#include "precint/shift_space.hpp"

namespace precint {

namespace {

std::size_t iteration_cap(const LocalOptions& options, std::optional<long> initial, std::size_t r) {
  if (options.max_iterations) return *options.max_iterations;
  if (const char* env = std::getenv("PRECINT_MAX_ITER")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0') return v;
  }
  if (initial) return static_cast<std::size_t>(std::max(0L, *initial)) + r + 8;
  return 10000;
}

}  // namespace

LocalResult local_integral_basis(ValuedSpace& space, const BasisMatrix& basis,
                                 const AlgebraicPoint& z, const LocalOptions& options) {
  const std::size_t r = space.dimension();
  if (basis.size() != r) throw PreconditionError("basis must have one row per dimension");
  require_independent(basis.rows);

  LocalResult res;
  res.basis = basis;
  auto& rows = res.basis.rows;
  const RationalFunction norm(space.uniformizer_norm(z));
  const std::string at = " at " + z.to_string();

  for (std::size_t i = 0; i < r; ++i) {
    const ExtInt v = space.val(rows[i], z);
    if (v.is_infinite()) throw PreconditionError("basis row " + std::to_string(i) + " is zero");
    if (v.value() != 0) {
      rows[i] = rows[i].scaled(norm.pow(-v.value()));
      res.basis.provenance.push_back("row " + std::to_string(i) + ": scaled by norm^" +
                                     std::to_string(-v.value()) + at);
    }
  }

  std::optional<long> disc;
  if (options.track_discriminant) disc = space.discriminant(rows, z);
  res.initial_disc = disc;
  const std::size_t cap = iteration_cap(options, disc, r);

  for (std::size_t d = 1; d < r; ++d) {
    while (true) {
      const std::span<const QuotientElement> prefix(rows.data(), d);
      const auto alpha = space.find_alpha(prefix, rows[d], z);
      if (!alpha) break;
      if (res.updates >= cap) {
        throw InternalError("local integral basis" + at + " exceeded the iteration cap of " +
                            std::to_string(cap));
      }
      QuotientElement next = rows[d].scaled(space.galois_sum(NFElem(1), z));
      for (std::size_t i = 0; i < d; ++i) {
        if ((*alpha)[i].is_zero()) continue;
        next += rows[i].scaled(space.galois_sum((*alpha)[i], z));
      }
      rows[d] = std::move(next);
      ++res.updates;
      res.basis.provenance.push_back("row " + std::to_string(d) + ": alpha update" + at);
      if (options.track_discriminant) {
        const auto after = space.discriminant(rows, z);
        res.steps.push_back({d, disc, after});
        disc = after;
      } else {
        res.steps.push_back({d, std::nullopt, std::nullopt});
      }
    }
  }
  res.final_disc = disc;
  return res;
}

GlobalResult global_integral_basis(const OreOperator& l, const ZSpec& zspec,
                                   const LocalOptions& options) {
  ShiftSpace space(l);
  GlobalResult out;
  out.worklist = worklist(space.modulus(), zspec);
  out.basis = BasisMatrix::standard(space.dimension());
  for (const auto& entry : out.worklist) {
    for (long n : entry.points) {
      const AlgebraicPoint z = entry.orbit.with_offset(n);
      LocalResult run = local_integral_basis(space, out.basis, z, options);
      out.basis = run.basis;
      out.runs.push_back({z, std::move(run)});
    }
  }
  return out;
}

long discriminant(const OreOperator& l, const BasisMatrix& basis, const AlgebraicPoint& z) {
  ShiftSpace space(l);
  return *space.discriminant(basis.rows, z);
}

}  // namespace precint
