#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "core/model.hpp"
#include "core/rng.hpp"

namespace tverberg {

// Start set for the homotopy: r-1 near-regular simplices at slightly
// different radii around the origin plus a near-origin point, every
// coordinate independently perturbed by at most delta. The partition
// (one block per simplex, the origin point as a singleton) is certified
// strictly before the configuration is returned.
struct InitialConfig {
  std::vector<Point> points;
  Partition partition;
  Rat delta; // perturbation radius actually used (halved on retries)
};

InitialConfig make_initial(int d, int r, Rat delta, Rng& rng);

// d+1 rational vertices, centroid exactly at the origin, circumradius
// approximately 1.
std::vector<Point> near_regular_simplex(int d);

// First time in (state.t, 1] at which some coefficient vanishes.
struct SingularEvent {
  Rat t1;
  int h; // point whose coefficient hits zero; unique at t1
  int q; // block currently holding h
};

// One line per singular event, for the --trace output.
struct TraceRecord {
  int stage = 0;
  int event = 0; // ordinal within the stage, starting at 1
  Rat t1;
  int h = 0;
  int q = 0;
  int j = 0;
};

// One homotopy stage: point m travels from its position in `start` to
// `target` as t runs from 0 to 1. Every state this engine stores is
// strictly regular (all alpha_i > 0 for its partition).
struct PathState {
  Rat t;
  int m = 0;
  Partition partition;
  Instance start; // geometry at stage-local t = 0
  Point target;   // position of point m at t = 1
  long pivot_count = 0;

  // Instance with point m at (1-t) a_m + t b_m.
  Instance at(const Rat& tv) const;
};

// Endpoint determinants for a fixed partition along the stage. Only the
// column of the moving point depends on t, so every det M_i(t) and
// det M(t) is linear in t and fully described by its endpoint values.
struct StageScan {
  std::vector<std::pair<Rat, Rat>> coef_dets; // per point: det M_i(0), det M_i(1)
  std::pair<Rat, Rat> sys_det;                // det M(0), det M(1)
};

StageScan scan_stage(const Instance& start, const Point& target, int m,
                     const Partition& part);

// Root of the line through (0, f0) and (1, f1): f0 / (f0 - f1). nullopt for
// a constant function.
std::optional<Rat> linear_root(const Rat& f0, const Rat& f1);

// Scans all coefficient determinants and returns the earliest root in
// (state.t, 1], or nullopt when the stage finishes without another event.
// Throws DegeneracyError when two indices reach the minimal root at the
// same time or when det M vanishes at the event time.
std::optional<SingularEvent> next_event(const PathState& state);

// Everything a pivot decides and asserts, for test and acceptance hooks.
struct PivotAudit {
  int stage = 0;
  Rat t1;
  int h = 0;
  int q = 0;
  int chosen_j = 0;
  Rat det_m_at_t1;
  std::vector<std::pair<int, Rat>> candidate_dets; // (p, det of moved system at t1), p in J
  std::vector<std::pair<int, std::pair<Rat, Rat>>> full_block_dets;
  // endpoint dets for p with |X_p| = d+1; both exactly zero
};

using PivotAuditFn = std::function<void(const PivotAudit&)>;

// Relocates a_h out of block q into the block j whose moved-partition
// determinant at t1 has sign opposite to det M(t1); smallest such j wins.
// Asserts the cofactor identity det M(t1) + sum_{p in J} det(moved_p, t1) = 0.
Partition pivot(const PathState& state, const SingularEvent& ev,
                const StageScan& scan, int stage_index = 0,
                const PivotAuditFn& audit = {});

// Runs one full stage: repeatedly finds the next event and pivots until no
// event remains, then certifies strict regularity at t = 1. After every
// pivot, strict positivity is re-established at the exact midpoint of the
// event time and the following event time. Throws DegeneracyError on any
// situation a-general position rules out, and when pivot_count would
// exceed pivot_cap.
PathState run_stage(PathState state, long pivot_cap, int stage_index,
                    std::vector<TraceRecord>* trace = nullptr,
                    const PivotAuditFn& audit = {});

} // namespace tverberg
