#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "core/linalg.hpp"
#include "core/pathfollow.hpp"

using namespace tverberg;

namespace {

Rat dist2(const Point& a, const Point& b) {
  Rat s;
  for (std::size_t c = 0; c < a.size(); ++c) s += (a[c] - b[c]) * (a[c] - b[c]);
  return s;
}

// 1-D crossing stage: points -1, 1 form the first block, the singleton 0
// travels to 5 and drags the meeting point across the left endpoint.
PathState crossing_state() {
  Instance start(1, 2, {{Rat(-1)}, {Rat(1)}, {Rat(0)}});
  PathState st{Rat(0), 2, Partition({{0, 1}, {2}}, 3), start, Point{Rat(5)}, 0};
  return st;
}

// Mirror-symmetric stage: two nested triangles around the origin, singleton
// moving straight up through the apex of the inner one, where both base
// coefficients vanish at the same t.
PathState tie_state() {
  Instance start(2, 3,
                 {{Rat(0), Rat(1)},
                  {Rat(-1), Rat(-1, 2)},
                  {Rat(1), Rat(-1, 2)},
                  {Rat(0), Rat(2)},
                  {Rat(-2), Rat(-1)},
                  {Rat(2), Rat(-1)},
                  {Rat(0), Rat(0)}});
  PathState st{Rat(0), 6, Partition({{0, 1, 2}, {3, 4, 5}, {6}}, 7), start,
               Point{Rat(0), Rat(2)}, 0};
  return st;
}

} // namespace

TEST_CASE("near_regular_simplex invariants") {
  for (int d = 1; d <= 4; ++d) {
    std::vector<Point> v = near_regular_simplex(d);
    REQUIRE(static_cast<int>(v.size()) == d + 1);

    // Centroid exactly at the origin.
    for (int c = 0; c < d; ++c) {
      Rat s;
      for (const Point& p : v) s += p[static_cast<std::size_t>(c)];
      CHECK(s.is_zero());
    }

    // Nearly unit circumradius and nearly equal edges: within 1%.
    for (const Point& p : v) {
      Rat norm2 = dist2(p, Point(static_cast<std::size_t>(d), Rat(0)));
      CHECK((norm2 - Rat(1)).abs() < Rat(1, 100));
    }
    Rat edge2 = dist2(v[0], v[1]);
    for (std::size_t i = 0; i < v.size(); ++i)
      for (std::size_t j = i + 1; j < v.size(); ++j) {
        Rat e = dist2(v[i], v[j]);
        CHECK((e - edge2).abs() < edge2 / Rat(100));
      }

    // Affine independence: edge vectors from v[0] form a nonsingular matrix.
    RatMatrix m(static_cast<std::size_t>(d), static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i)
      for (int c = 0; c < d; ++c)
        m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(c)) =
            v[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(c)] -
            v[0][static_cast<std::size_t>(c)];
    CHECK(!det(m).is_zero());
  }
}

TEST_CASE("make_initial with zero jitter gives uniform barycentrics") {
  Rng rng(1);
  InitialConfig cfg = make_initial(2, 3, Rat(0), rng);
  REQUIRE(cfg.points.size() == 7);
  CHECK(cfg.delta.is_zero());
  CHECK(cfg.partition.block(0) == std::vector<int>{0, 1, 2});
  CHECK(cfg.partition.block(2) == std::vector<int>{6});

  Instance inst(2, 3, cfg.points);
  Certificate cert = solve_partition(inst, cfg.partition);
  CHECK(cert.strict);
  CHECK(cert.z == RatVector{Rat(0), Rat(0)});
  for (int i = 0; i < 6; ++i) CHECK(cert.alpha[static_cast<std::size_t>(i)] == Rat(1, 3));
  CHECK(cert.alpha[6] == Rat(1));
}

TEST_CASE("make_initial certifies jittered configurations") {
  for (auto [d, r] : {std::pair{1, 2}, std::pair{2, 3}, std::pair{3, 2}}) {
    Rng rng(mix_seed(99, static_cast<std::uint64_t>(d * 10 + r)));
    InitialConfig cfg = make_initial(d, r, Rat(1, 1 << 20), rng);
    Instance inst(d, r, cfg.points);
    Certificate cert = solve_partition(inst, cfg.partition);
    CHECK(cert.strict);
    CHECK(verify_certificate(inst, cfg.partition, cert, true).ok);
  }
  Rng rng(3);
  CHECK_THROWS_AS(make_initial(0, 2, Rat(1), rng), ContractError);
  CHECK_THROWS_AS(make_initial(2, 1, Rat(1), rng), ContractError);
  CHECK_THROWS_AS(make_initial(2, 2, Rat(-1), rng), ContractError);
}

TEST_CASE("linear_root") {
  CHECK(linear_root(Rat(2), Rat(-3)) == Rat(2, 5));
  CHECK(linear_root(Rat(1), Rat(2)) == Rat(-1)); // root outside [0,1] still reported
  CHECK(!linear_root(Rat(5), Rat(5)).has_value());
  CHECK(!linear_root(Rat(0), Rat(0)).has_value());
  CHECK(eval_affine(Rat(2), Rat(-3), Rat(2, 5)).is_zero());
}

TEST_CASE("PathState::at interpolates only the moving point") {
  PathState st = crossing_state();
  CHECK(st.at(Rat(0)).point(2) == Point{Rat(0)});
  CHECK(st.at(Rat(1)).point(2) == Point{Rat(5)});
  CHECK(st.at(Rat(1, 3)).point(2) == Point{Rat(5, 3)});
  CHECK(st.at(Rat(1, 3)).point(0) == Point{Rat(-1)});
  CHECK(st.at(Rat(1, 3)).point(1) == Point{Rat(1)});
}

TEST_CASE("scan_stage endpoints match direct determinants") {
  PathState st = crossing_state();
  StageScan scan = scan_stage(st.start, st.target, st.m, st.partition);

  for (Rat t : {Rat(0), Rat(1, 7), Rat(1, 2), Rat(1)}) {
    TverbergSystem sys = build_system(st.at(t), st.partition);
    Rat m = det(sys.matrix);
    CHECK(eval_affine(scan.sys_det.first, scan.sys_det.second, t) == m);
    for (int i = 0; i < 3; ++i) {
      Rat mi = replaced_column_det(sys, i);
      const auto& pr = scan.coef_dets[static_cast<std::size_t>(i)];
      CHECK(eval_affine(pr.first, pr.second, t) == mi);
    }
  }

  // The moving point's replaced determinant does not depend on t at all.
  CHECK(scan.coef_dets[2].first == scan.coef_dets[2].second);
}

TEST_CASE("next_event finds the crossing exactly") {
  PathState st = crossing_state();
  auto ev = next_event(st);
  REQUIRE(ev.has_value());
  CHECK(ev->t1 == Rat(1, 5));
  CHECK(ev->h == 0);
  CHECK(ev->q == 0);

  // From beyond the crossing there is nothing left.
  st.t = Rat(1, 2);
  CHECK(!next_event(st).has_value());
}

TEST_CASE("next_event reports exact ties as degeneracy") {
  PathState st = tie_state();
  CHECK_THROWS_AS(next_event(st), DegeneracyError);
  CHECK_THROWS_AS(run_stage(st, 100, 0), DegeneracyError);
}

TEST_CASE("pivot relocates the vanished point and keeps the identity") {
  PathState st = crossing_state();
  StageScan scan = scan_stage(st.start, st.target, st.m, st.partition);
  auto ev = next_event(st);
  REQUIRE(ev.has_value());

  PivotAudit audit;
  bool audited = false;
  Partition moved = pivot(st, *ev, scan, 4, [&](const PivotAudit& a) {
    audit = a;
    audited = true;
  });
  CHECK(moved.block(0) == std::vector<int>{1});
  CHECK(moved.block(1) == std::vector<int>{0, 2});

  REQUIRE(audited);
  CHECK(audit.stage == 4);
  CHECK(audit.t1 == Rat(1, 5));
  CHECK(audit.h == 0);
  CHECK(audit.q == 0);
  CHECK(audit.chosen_j == 1);
  CHECK(!audit.det_m_at_t1.is_zero());
  REQUIRE(audit.candidate_dets.size() == 1);
  CHECK(audit.candidate_dets[0].first == 1);
  // Cofactor identity with a single candidate: its value is exactly the
  // negative of det M at the event time.
  CHECK(audit.candidate_dets[0].second == -audit.det_m_at_t1);
  CHECK(audit.candidate_dets[0].second.sign() == -audit.det_m_at_t1.sign());
  CHECK(audit.full_block_dets.empty());
}

TEST_CASE("run_stage walks the crossing to a strict endpoint") {
  PathState st = crossing_state();
  std::vector<TraceRecord> trace;
  PathState done = run_stage(st, 100, 0, &trace);

  CHECK(done.t == Rat(1));
  CHECK(done.pivot_count == 1);
  CHECK(done.partition.canonical_blocks() ==
        std::vector<std::vector<int>>{{0, 2}, {1}});

  REQUIRE(trace.size() == 1);
  CHECK(trace[0].stage == 0);
  CHECK(trace[0].event == 1);
  CHECK(trace[0].t1 == Rat(1, 5));
  CHECK(trace[0].h == 0);
  CHECK(trace[0].q == 0);
  CHECK(trace[0].j == 1);

  Certificate cert = solve_partition(done.at(Rat(1)), done.partition);
  CHECK(cert.strict);
  CHECK(cert.z == RatVector{Rat(1)});
  CHECK(cert.alpha == RatVector{Rat(2, 3), Rat(1), Rat(1, 3)});
}

TEST_CASE("run_stage without events keeps the partition") {
  PathState st = crossing_state();
  st.target = Point{Rat(1, 4)}; // stays inside the segment, no crossing
  std::vector<TraceRecord> trace;
  PathState done = run_stage(st, 100, 0, &trace);
  CHECK(trace.empty());
  CHECK(done.pivot_count == 0);
  CHECK(done.partition == st.partition);
}

TEST_CASE("run_stage enforces the pivot cap") {
  PathState st = crossing_state();
  CHECK_THROWS_AS(run_stage(st, 0, 0), DegeneracyError);
}

TEST_CASE("random stages: events verified against the determinant line") {
  int events_checked = 0;
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    Rng rng(mix_seed(2024, seed));
    InitialConfig cfg = make_initial(2, 3, Rat(1, 1 << 12), rng);
    Instance start(2, 3, cfg.points);

    const int m = 6;
    Point target{Rat(rng.uniform_int(-8, 8), 3), Rat(rng.uniform_int(-8, 8), 3)};
    if (target == start.point(m)) continue;
    PathState st{Rat(0), m, cfg.partition, start, target, 0};

    std::optional<SingularEvent> ev;
    try {
      ev = next_event(st);
    } catch (const DegeneracyError&) {
      continue; // jittered input can still collide; not this test's concern
    }
    if (!ev) continue;

    StageScan scan = scan_stage(st.start, st.target, st.m, st.partition);
    TverbergSystem sys = build_system(st.at(ev->t1), st.partition);
    CHECK(replaced_column_det(sys, ev->h).is_zero());
    CHECK(!det(sys.matrix).is_zero());
    for (int i = 0; i < 7; ++i) {
      if (i == ev->h) continue;
      CHECK(!replaced_column_det(sys, i).is_zero());
    }
    // Strictly positive before the event.
    Certificate mid = solve_partition(st.at(ev->t1 / Rat(2)), st.partition);
    CHECK(mid.strict);
    (void)scan;
    ++events_checked;
  }
  CHECK(events_checked > 0);
}

TEST_CASE("full stage run on jittered input stays sound") {
  Rng rng(mix_seed(7, 7));
  InitialConfig cfg = make_initial(2, 3, Rat(1, 1 << 12), rng);
  Instance start(2, 3, cfg.points);
  PathState st{Rat(0), 6, cfg.partition, start, Point{Rat(3), Rat(3)}, 0};

  std::vector<TraceRecord> trace;
  std::vector<PivotAudit> audits;
  PathState done = run_stage(st, 1000, 0, &trace, [&](const PivotAudit& a) {
    audits.push_back(a);
  });

  CHECK(audits.size() == trace.size());
  for (const PivotAudit& a : audits) {
    Rat sum = a.det_m_at_t1;
    for (const auto& [p, v] : a.candidate_dets) sum += v;
    CHECK(sum.is_zero());
    for (const auto& [p, pr] : a.full_block_dets) {
      CHECK(pr.first.is_zero());
      CHECK(pr.second.is_zero());
    }
  }

  Certificate cert = solve_partition(done.at(Rat(1)), done.partition);
  CHECK(cert.strict);
  CHECK(verify_certificate(done.at(Rat(1)), done.partition, cert, true).ok);
}
