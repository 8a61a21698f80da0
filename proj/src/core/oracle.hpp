#pragma once

#include <cstdint>
#include <vector>

#include "core/model.hpp"

namespace tverberg {

struct OracleEntry {
  Partition partition;
  Certificate certificate;
};

// Exhaustive ground truth for small instances: every proper partition is
// solved exactly and kept when all coefficients are admissible.
struct OracleReport {
  std::vector<OracleEntry> valid_partitions;
  long long total_proper_partitions = 0;
  // Partitions whose affine hulls fail to meet in a single point. Zero for
  // points in general position.
  long long singular_partitions = 0;
  bool strict = false; // acceptance threshold used: alpha > 0 vs alpha >= 0
};

// Number of unordered partitions of n labeled points into exactly r blocks
// of size 1..d+1 each, computed exactly.
Rat count_proper_partitions(int d, int r, int n);

// Enumerates unordered proper partitions in a fixed order (blocks ordered by
// smallest element, lexicographic over point assignments) and tests each one
// via an exact solve. strict=false accepts alpha >= 0 so degenerate inputs
// still report their valid partitions. Throws SizeError when the partition
// count exceeds the enumeration guard of 10^7.
OracleReport enumerate_tverberg(const Instance& inst, bool strict = false);

// Label-invariant membership test against the report's valid set.
bool contains_partition(const OracleReport& report, const Partition& part);

} // namespace tverberg
