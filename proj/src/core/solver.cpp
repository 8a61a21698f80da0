#include "core/solver.hpp"

#include <algorithm>
#include <optional>

namespace tverberg {

Rat bounding_extent(const Instance& inst) {
  Rat extent(0);
  for (int c = 0; c < inst.dim(); ++c) {
    Rat lo = inst.point(0)[static_cast<std::size_t>(c)];
    Rat hi = lo;
    for (int i = 1; i < inst.size(); ++i) {
      const Rat& v = inst.point(i)[static_cast<std::size_t>(c)];
      if (v < lo) lo = v;
      if (v > hi) hi = v;
    }
    if (hi - lo > extent) extent = hi - lo;
  }
  return extent;
}

Instance perturb(const Instance& inst, const Rat& delta, std::uint64_t seed) {
  if (delta.sign() <= 0) throw ContractError("perturb: delta must be positive");
  Rng rng(seed);
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(inst.size()));
  for (int i = 0; i < inst.size(); ++i) {
    Point p(static_cast<std::size_t>(inst.dim()));
    for (int c = 0; c < inst.dim(); ++c)
      p[static_cast<std::size_t>(c)] =
          inst.point(i)[static_cast<std::size_t>(c)] + rng.uniform_symmetric(delta);
    pts.push_back(std::move(p));
  }
  return Instance(inst.dim(), inst.parts(), std::move(pts));
}

namespace {

struct AttemptOutcome {
  Partition partition;
  Certificate certificate; // strict, for the perturbed points
  std::vector<Point> perturbed_points;
  std::vector<int> pivots_per_stage;
  std::vector<TraceRecord> trace;
};

AttemptOutcome run_attempt(const Instance& inst, const Rat& delta, std::uint64_t seed,
                           long pivot_cap, const PivotAuditFn& audit) {
  const int d = inst.dim();
  const int r = inst.parts();
  const int n = inst.size();

  Instance targets = perturb(inst, delta, mix_seed(seed, 1));

  Rng init_rng(mix_seed(seed, 2));
  // The initial configuration lives at unit scale; 2^-20 is far inside the
  // simplices' interior margin while still randomizing every coordinate.
  InitialConfig init = make_initial(d, r, Rat(1, 1 << 20), init_rng);

  PathState state{Rat(0), 0, init.partition,
                  Instance(d, r, init.points), Point{}, 0};

  AttemptOutcome out{init.partition, Certificate{}, targets.points(), {}, {}};
  for (int m = 0; m < n; ++m) {
    state.m = m;
    state.t = Rat(0);
    state.target = targets.point(m);
    long before = state.pivot_count;
    state = run_stage(std::move(state), pivot_cap, m, &out.trace, audit);
    out.pivots_per_stage.push_back(static_cast<int>(state.pivot_count - before));
    // The stage ends exactly at the target; settle it for the next stage.
    state.start = state.start.with_point(m, targets.point(m));
    state.t = Rat(0);
  }

  out.partition = state.partition;
  out.certificate = solve_partition(targets, state.partition);
  if (!out.certificate.strict)
    throw DegeneracyError("solve: final certificate not strict on perturbed points");
  VerifyResult vr = verify_certificate(targets, state.partition, out.certificate, true);
  if (!vr.ok) throw InternalError("solve: perturbed certificate failed verification: " + vr.reason);
  return out;
}

} // namespace

SolveResult solve(const Instance& inst, const SolverConfig& cfg) {
  if (cfg.perturb_exponent < 1) throw ContractError("solve: perturb_exponent must be >= 1");
  if (cfg.max_restarts < 1) throw ContractError("solve: max_restarts must be >= 1");
  if (cfg.pivot_cap < 0) throw ContractError("solve: pivot_cap must be >= 0");

  const int n = inst.size();
  const long pivot_cap =
      cfg.pivot_cap > 0 ? cfg.pivot_cap : 10L * n * inst.parts();

  Rat delta0 = bounding_extent(inst);
  for (int k = 0; k < cfg.perturb_exponent; ++k) delta0 /= Rat(2);

  std::optional<SolveResult> fallback;
  Rat delta = delta0;
  for (int attempt = 0; attempt < cfg.max_restarts; ++attempt, delta /= Rat(2)) {
    std::uint64_t attempt_seed = mix_seed(cfg.seed, 1000 + static_cast<std::uint64_t>(attempt));
    std::optional<AttemptOutcome> out;
    try {
      out = run_attempt(inst, delta, attempt_seed, pivot_cap, cfg.audit);
    } catch (const DegeneracyError&) {
      continue;
    } catch (const SingularSystemError&) {
      continue;
    } catch (const ContractError&) {
      // perturbation produced coincident points; retry with a smaller radius
      continue;
    }

    SolveResult res{out->partition, out->certificate, CertifiedFor::perturbed,
                    delta,          out->perturbed_points,
                    SolveStats{attempt, out->pivots_per_stage}, out->trace};

    if (!cfg.certify_original) return res;

    try {
      Certificate orig = solve_partition(inst, out->partition);
      bool nonneg = std::all_of(orig.alpha.begin(), orig.alpha.end(),
                                [](const Rat& a) { return a.sign() >= 0; });
      if (nonneg) {
        VerifyResult vr = verify_certificate(inst, out->partition, orig, false);
        if (!vr.ok)
          throw InternalError("solve: original certificate failed verification: " + vr.reason);
        res.certificate = std::move(orig);
        res.certified_for = CertifiedFor::original;
        return res;
      }
    } catch (const SingularSystemError&) {
      // The partition's hull intersection collapses on the original points;
      // fall back to the perturbed certificate.
    }
    if (!fallback) fallback = std::move(res);
  }

  if (fallback) return *fallback;
  throw InternalError("solve: restarts exhausted without a certificate");
}

} // namespace tverberg
