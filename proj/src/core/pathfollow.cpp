#include "core/pathfollow.hpp"

#include <algorithm>

namespace tverberg {

std::vector<Point> near_regular_simplex(int d) {
  if (d < 1) throw ContractError("near_regular_simplex: d must be >= 1");
  if (d == 1) return {Point{Rat(1)}, Point{Rat(-1)}};

  // First vertex at (1, 0, ..., 0); the remaining d vertices sit at first
  // coordinate -1/d and form a scaled copy of the (d-1)-simplex in the other
  // coordinates. The scale rho approximates sqrt(d^2-1)/d on a 2^-16 grid,
  // which keeps the centroid exactly at the origin while the circumradius
  // stays within 2^-16 of 1.
  std::vector<Point> sub = near_regular_simplex(d - 1);
  mpz_class target = mpz_class(d) * d - 1;
  target <<= 32;
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), target.get_mpz_t());
  Rat rho(root, mpz_class(d) * (mpz_class(1) << 16));

  std::vector<Point> out;
  Point first(static_cast<std::size_t>(d), Rat(0));
  first[0] = Rat(1);
  out.push_back(std::move(first));
  for (const Point& s : sub) {
    Point v(static_cast<std::size_t>(d), Rat(0));
    v[0] = Rat(-1, d);
    for (std::size_t c = 0; c < s.size(); ++c) v[c + 1] = rho * s[c];
    out.push_back(std::move(v));
  }
  return out;
}

InitialConfig make_initial(int d, int r, Rat delta, Rng& rng) {
  if (d < 1 || r < 2) throw ContractError("make_initial: need d >= 1 and r >= 2");
  if (delta.sign() < 0) throw ContractError("make_initial: delta must be >= 0");

  const int n = Instance::expected_size(d, r);
  const std::vector<Point> base = near_regular_simplex(d);

  std::vector<std::vector<int>> blocks;
  for (int p = 0; p < r - 1; ++p) {
    std::vector<int> b;
    for (int k = 0; k < d + 1; ++k) b.push_back(p * (d + 1) + k);
    blocks.push_back(std::move(b));
  }
  blocks.push_back({n - 1});
  Partition partition(blocks, n);

  const int max_attempts = 40;
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<Point> points;
    points.reserve(static_cast<std::size_t>(n));
    for (int p = 0; p < r - 1; ++p) {
      // Distinct radii keep the copies disjoint even at delta = 0.
      Rat scale = Rat(4 * r + p, 4 * r);
      for (const Point& v : base) {
        Point pt(static_cast<std::size_t>(d));
        for (int c = 0; c < d; ++c)
          pt[static_cast<std::size_t>(c)] =
              scale * v[static_cast<std::size_t>(c)] + rng.uniform_symmetric(delta);
        points.push_back(std::move(pt));
      }
    }
    Point origin(static_cast<std::size_t>(d));
    for (int c = 0; c < d; ++c)
      origin[static_cast<std::size_t>(c)] = rng.uniform_symmetric(delta);
    points.push_back(std::move(origin));

    try {
      Instance inst(d, r, points);
      Certificate cert = solve_partition(inst, partition);
      if (cert.strict) return InitialConfig{std::move(points), partition, delta};
    } catch (const SingularSystemError&) {
    } catch (const ContractError&) {
      // coincident points; only possible for large delta
    }
    delta /= Rat(2);
  }
  throw ConfigError("make_initial: failed to certify an initial configuration");
}

Instance PathState::at(const Rat& tv) const {
  if (tv.is_zero()) return start;
  const Point& a = start.point(m);
  Point pos(a.size());
  const Rat one_minus = Rat(1) - tv;
  for (std::size_t c = 0; c < a.size(); ++c)
    pos[c] = one_minus * a[c] + tv * target[c];
  return start.with_point(m, std::move(pos));
}

StageScan scan_stage(const Instance& start, const Point& target, int m,
                     const Partition& part) {
  TverbergSystem sys0 = build_system(start, part);
  TverbergSystem sys1 = build_system(start, part, PointOverride{m, target});

  StageScan scan;
  scan.sys_det = {det(sys0.matrix), det(sys1.matrix)};
  const int n = start.size();
  scan.coef_dets.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    scan.coef_dets[static_cast<std::size_t>(i)] = {replaced_column_det(sys0, i),
                                                   replaced_column_det(sys1, i)};
  return scan;
}

std::optional<Rat> linear_root(const Rat& f0, const Rat& f1) {
  if (f0 == f1) return std::nullopt;
  return f0 / (f0 - f1);
}

namespace {

std::optional<SingularEvent> find_event(const StageScan& scan, const Rat& from_t,
                                        int m, const Partition& part) {
  std::optional<Rat> best;
  int best_h = -1;
  bool tie = false;
  const int n = static_cast<int>(scan.coef_dets.size());
  for (int i = 0; i < n; ++i) {
    if (i == m) continue; // det M_m(t) is constant along the stage
    const auto& [d0, d1] = scan.coef_dets[static_cast<std::size_t>(i)];
    auto root = linear_root(d0, d1);
    if (!root || *root <= from_t || *root > Rat(1)) continue;
    if (best && *root == *best) {
      tie = true;
    } else if (!best || *root < *best) {
      best = *root;
      best_h = i;
      tie = false;
    }
  }
  if (!best) return std::nullopt;
  if (tie)
    throw DegeneracyError("next_event: two coefficients vanish at the same time");
  if (eval_affine(scan.sys_det.first, scan.sys_det.second, *best).is_zero())
    throw DegeneracyError("next_event: system determinant vanishes at the event time");
  return SingularEvent{*best, best_h, part.block_of(best_h)};
}

// Strict positivity of every alpha_i(t) read off the endpoint determinants:
// alpha_i(t) = det M_i(t) / det M(t), so all signs must match det M(t).
bool strictly_positive_at(const StageScan& scan, const Rat& t) {
  Rat m = eval_affine(scan.sys_det.first, scan.sys_det.second, t);
  if (m.is_zero()) return false;
  for (const auto& [d0, d1] : scan.coef_dets)
    if (eval_affine(d0, d1, t).sign() != m.sign()) return false;
  return true;
}

void assert_regular_start(const PathState& state) {
  Certificate cert;
  try {
    cert = solve_partition(state.at(state.t), state.partition);
  } catch (const SingularSystemError&) {
    throw DegeneracyError("run_stage: stage start is not a regular value");
  }
  if (!cert.strict)
    throw DegeneracyError("run_stage: stage start is not strictly regular");
}

} // namespace

std::optional<SingularEvent> next_event(const PathState& state) {
  StageScan scan = scan_stage(state.start, state.target, state.m, state.partition);
  return find_event(scan, state.t, state.m, state.partition);
}

Partition pivot(const PathState& state, const SingularEvent& ev,
                const StageScan& scan, int stage_index, const PivotAuditFn& audit) {
  const int d = state.start.dim();
  const int n = state.start.size();
  const int r = state.partition.block_count();
  const int q = ev.q;

  if (static_cast<int>(state.partition.block(q).size()) < 2)
    throw InternalError("pivot: vanishing coefficient in a singleton block");
  if (ev.h == state.m)
    throw InternalError("pivot: the moving point's own determinant is constant");

  Rat det_m_t1 = eval_affine(scan.sys_det.first, scan.sys_det.second, ev.t1);
  if (det_m_t1.is_zero())
    throw InternalError("pivot: det M(t1) = 0 should have been caught earlier");

  PivotAudit record;
  record.stage = stage_index;
  record.t1 = ev.t1;
  record.h = ev.h;
  record.q = q;
  record.det_m_at_t1 = det_m_t1;

  // All determinants below share one column layout: the layout of the
  // current partition's system. Moving h into block p is expressed by
  // relocating the entries of h's column into p's row band, never by
  // reordering columns, so the cofactor expansion of the column-h-spread
  // matrix along that column is exactly det M + sum over p of the moved
  // determinants.
  TverbergSystem sys0 = build_system(state.start, state.partition);
  TverbergSystem sys1 =
      build_system(state.start, state.partition, PointOverride{state.m, state.target});
  const auto col = static_cast<std::size_t>(sys0.column_of_point[static_cast<std::size_t>(ev.h)]);
  const Point& ah = state.start.point(ev.h); // h != m, so this column is static

  Rat sum = det_m_t1;
  int chosen = -1;
  for (int p = 0; p < r; ++p) {
    if (p == q) continue;
    RatVector v(static_cast<std::size_t>(n + d), Rat(0));
    const std::size_t row0 = static_cast<std::size_t>(p * (d + 1));
    for (int c = 0; c < d; ++c) v[row0 + static_cast<std::size_t>(c)] = ah[static_cast<std::size_t>(c)];
    v[row0 + static_cast<std::size_t>(d)] = Rat(1);

    RatMatrix m0 = sys0.matrix;
    m0.set_column(col, v);
    RatMatrix m1 = sys1.matrix;
    m1.set_column(col, v);
    Rat e0 = det(m0), e1 = det(m1);

    if (static_cast<int>(state.partition.block(p).size()) > d) {
      // h would be the block's (d+2)-nd point: d+2 columns supported on the
      // block's d+1 rows are dependent, so this term vanishes identically.
      if (!e0.is_zero() || !e1.is_zero())
        throw InternalError("pivot: full-block determinant is structurally zero");
      record.full_block_dets.push_back({p, {e0, e1}});
      continue;
    }
    Rat val = eval_affine(e0, e1, ev.t1);
    record.candidate_dets.push_back({p, val});
    sum += val;
    if (chosen == -1 && val.sign() == -det_m_t1.sign()) chosen = p;
  }

  if (!sum.is_zero())
    throw DegeneracyError("pivot: cofactor identity violated");
  if (chosen == -1)
    throw DegeneracyError("pivot: no admissible target block");

  record.chosen_j = chosen;
  if (audit) audit(record);
  return state.partition.with_point_moved(ev.h, chosen);
}

PathState run_stage(PathState state, long pivot_cap, int stage_index,
                    std::vector<TraceRecord>* trace, const PivotAuditFn& audit) {
  assert_regular_start(state);

  StageScan scan = scan_stage(state.start, state.target, state.m, state.partition);
  auto ev = find_event(scan, state.t, state.m, state.partition);
  int stage_events = 0;

  while (ev) {
    if (ev->t1 == Rat(1))
      throw DegeneracyError("run_stage: singular event exactly at the stage endpoint");
    if (state.pivot_count + 1 > pivot_cap)
      throw DegeneracyError("run_stage: pivot cap exceeded");
    ++state.pivot_count;
    ++stage_events;

    Partition moved = pivot(state, *ev, scan, stage_index, audit);
    if (trace)
      trace->push_back(TraceRecord{stage_index, stage_events, ev->t1, ev->h, ev->q,
                                   moved.block_of(ev->h)});
    state.partition = std::move(moved);
    scan = scan_stage(state.start, state.target, state.m, state.partition);

    auto ev_next = find_event(scan, ev->t1, state.m, state.partition);
    Rat t_next = ev_next ? ev_next->t1 : Rat(1);
    Rat t_mid = (ev->t1 + t_next) / Rat(2);
    if (!strictly_positive_at(scan, t_mid))
      throw DegeneracyError("run_stage: coefficients not strictly positive after pivot");
    state.t = t_mid;
    ev = ev_next;
  }

  state.t = Rat(1);
  // The stage endpoint seeds the next stage and must itself be strictly
  // regular.
  Certificate cert;
  try {
    cert = solve_partition(state.at(Rat(1)), state.partition);
  } catch (const SingularSystemError&) {
    throw DegeneracyError("run_stage: singular system at the stage endpoint");
  } catch (const ContractError&) {
    throw DegeneracyError("run_stage: point coincidence at the stage endpoint");
  }
  if (!cert.strict)
    throw DegeneracyError("run_stage: stage endpoint is not strictly regular");
  return state;
}

} // namespace tverberg
