#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "core/model.hpp"
#include "core/pathfollow.hpp"

namespace tverberg {

struct SolverConfig {
  // Perturbation radius = bounding-box extent / 2^perturb_exponent.
  int perturb_exponent = 40;
  int max_restarts = 8;
  std::uint64_t seed = 0;
  // 0 picks the default cap of 10 * n * r pivots per run.
  long pivot_cap = 0;
  // Re-solve the final partition on the unperturbed points and report a
  // certificate for them whenever the signs allow it.
  bool certify_original = true;
  // Optional hook receiving every pivot's audit record.
  PivotAuditFn audit;
};

enum class CertifiedFor { original, perturbed };

struct SolveStats {
  int restarts = 0;                 // failed attempts before the returned one
  std::vector<int> pivots_per_stage;
};

struct SolveResult {
  Partition partition;
  Certificate certificate;
  CertifiedFor certified_for = CertifiedFor::original;
  Rat perturbation_used;
  // The exact perturbed points the run operated on. This is the certified
  // set when certified_for == perturbed.
  std::vector<Point> perturbed_points;
  SolveStats stats;
  std::vector<TraceRecord> trace;
};

// Independent per-coordinate rational offsets of magnitude <= delta,
// deterministic under the seed.
Instance perturb(const Instance& inst, const Rat& delta, std::uint64_t seed);

// Largest coordinate extent of the instance's bounding box; positive for
// any valid instance.
Rat bounding_extent(const Instance& inst);

// Perturbs the input into (emulated) a-general position, builds the initial
// configuration, moves every point to its target through n homotopy stages,
// and certifies the resulting partition. Any degeneracy restarts with a
// fresh seed and half the perturbation radius. The returned certificate is
// always re-verified exactly against the set named by certified_for.
SolveResult solve(const Instance& inst, const SolverConfig& cfg = {});

} // namespace tverberg
