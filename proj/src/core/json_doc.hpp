#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "core/model.hpp"
#include "core/oracle.hpp"
#include "core/solver.hpp"

namespace tverberg {

// Instance document: {"d": int, "r": int, "points": [[coord, ...], ...]}.
// Coordinates are JSON integers, fraction strings "p/q", or decimal strings
// ("0.25", "-3e2"). Non-integer JSON numbers are rejected: a binary double
// does not say what decimal the author meant, so decimals must be quoted.
// r may come from the document, from r_override (which wins), or be inferred
// from the point count.
Instance parse_instance_text(const std::string& text,
                             std::optional<int> r_override = {});
std::string instance_to_text(const Instance& inst);

enum class GenDistribution {
  grid, // integer coordinates uniform in [-1000, 1000]
  cube, // dyadic rationals p/2^30 uniform in [0, 1]
};

// Deterministic random instance with n = (r-1)(d+1)+1 distinct points.
Instance generate_instance(int d, int r, GenDistribution dist, std::uint64_t seed);

// Result document: partition (canonical block order), z, alpha,
// certified_for, perturbation_used, stats; perturbed_points appears only
// when the certificate refers to them; trace names the side-car path when
// one was written.
std::string result_to_text(const SolveResult& res,
                           const std::optional<std::string>& trace_path = {});

// One compact JSON object per line: stage, event, t1, h, q, j.
std::string trace_to_jsonl(const std::vector<TraceRecord>& trace);

std::string oracle_report_to_text(const OracleReport& report);

// Accepts a result document (reads its "partition" field) or a bare array
// of index blocks.
Partition parse_partition_text(const std::string& text, int n);

struct VerifyDoc {
  bool ok = false;
  bool singular = false; // hulls' affine spans never meet: not a sign failure
  std::string text;      // document with the certificate or the failure reason
};

// Solves the block system for the given partition and reports whether a
// convex certificate (alpha >= 0) exists.
VerifyDoc verify_partition_doc(const Instance& inst, const Partition& part);

} // namespace tverberg
