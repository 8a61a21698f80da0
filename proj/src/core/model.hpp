#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/linalg.hpp"
#include "core/rat.hpp"

namespace tverberg {

// A point set X in Q^d with |X| = (r-1)(d+1)+1, the exact size for which a
// partition into r parts with intersecting convex hulls is guaranteed.
class Instance {
public:
  Instance(int d, int r, std::vector<Point> points);

  int dim() const { return d_; }
  int parts() const { return r_; }
  int size() const { return static_cast<int>(points_.size()); } // n

  const Point& point(int i) const { return points_[static_cast<std::size_t>(i)]; }
  const std::vector<Point>& points() const { return points_; }

  // Copy with point i relocated. Revalidates distinctness.
  Instance with_point(int i, Point p) const;

  static int expected_size(int d, int r) { return (r - 1) * (d + 1) + 1; }

private:
  int d_, r_;
  std::vector<Point> points_;
};

// Ordered list of disjoint index blocks covering [0, n). Block order is
// significant for matrix layout; validity of a certificate is not affected
// by relabeling.
class Partition {
public:
  Partition(std::vector<std::vector<int>> blocks, int n);

  int block_count() const { return static_cast<int>(blocks_.size()); }
  const std::vector<int>& block(int p) const { return blocks_[static_cast<std::size_t>(p)]; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int total_points() const { return n_; }

  int block_of(int i) const { return owner_[static_cast<std::size_t>(i)]; }

  // Every block has between 1 and d+1 points.
  bool is_proper(int d) const;

  // h moved from its current block into block p.
  Partition with_point_moved(int h, int p) const;

  // Blocks sorted by smallest element (each block already ascending);
  // used for label-invariant comparison and reporting.
  std::vector<std::vector<int>> canonical_blocks() const;

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.blocks_ == b.blocks_;
  }

private:
  std::vector<std::vector<int>> blocks_;
  std::vector<int> owner_;
  int n_;
};

// Relocation of one point, used to evaluate the system with the moving
// point at an interpolated position.
struct PointOverride {
  int index;
  Point position;
};

// The structured (n+d) x (n+d) linear system tying together the convex
// coefficients of every block and the common point z. Block p contributes
// d+1 rows: d coordinate rows (point columns carry a_i, the trailing d
// columns carry -I_d) and one row of ones whose rhs entry is 1.
struct TverbergSystem {
  RatMatrix matrix;
  RatVector rhs;
  std::vector<int> column_of_point; // point index -> matrix column
};

// Exact witness that all r hulls contain z: per block p,
// sum_{i in J_p} alpha_i = 1 and sum_{i in J_p} alpha_i a_i = z.
// alpha is indexed by point, not by matrix column.
struct Certificate {
  RatVector z;
  RatVector alpha;
  bool strict = false; // all alpha_i > 0 (vs >= 0)
};

struct VerifyResult {
  bool ok = false;
  std::string reason; // names the failing block / index when !ok
};

// Assembles the block system for a proper partition. Columns are ordered
// block by block, ascending point index within a block, then the d columns
// of the stacked -I_d. Throws ContractError for an improper partition.
TverbergSystem build_system(const Instance& inst, const Partition& part,
                            const std::optional<PointOverride>& override_point = {});

// det of the system matrix with the column of point i replaced by the rhs.
Rat replaced_column_det(const TverbergSystem& sys, int point_index);

// Solves the block system; the strict flag records whether every alpha_i is
// positive. Throws SingularSystemError when the partition's affine hulls do
// not meet in a single point (degenerate input).
Certificate solve_partition(const Instance& inst, const Partition& part,
                            const std::optional<PointOverride>& override_point = {});

// Exact re-check of a certificate against an instance and partition.
VerifyResult verify_certificate(const Instance& inst, const Partition& part,
                                const Certificate& cert, bool require_strict);

namespace detail {

// Structural assembly without the properness check. Blocks of size d+2
// appear transiently in the pivot's cofactor identity; their determinant is
// exactly zero and the audit verifies that.
TverbergSystem assemble_system(const std::vector<Point>& points, int d,
                               const std::vector<std::vector<int>>& blocks,
                               const std::optional<PointOverride>& override_point);

} // namespace detail

} // namespace tverberg
