#include "core/model.hpp"

#include <algorithm>

namespace tverberg {

Instance::Instance(int d, int r, std::vector<Point> points)
    : d_(d), r_(r), points_(std::move(points)) {
  if (d_ < 1) throw ContractError("Instance: dimension must be >= 1");
  if (r_ < 2) throw ContractError("Instance: parts must be >= 2");
  const int n = expected_size(d_, r_);
  if (static_cast<int>(points_.size()) != n)
    throw ContractError("Instance: expected n = (r-1)(d+1)+1 = " + std::to_string(n) +
                        " points, got " + std::to_string(points_.size()));
  for (const auto& p : points_)
    if (static_cast<int>(p.size()) != d_)
      throw ContractError("Instance: point dimension mismatch");
  for (std::size_t i = 0; i < points_.size(); ++i)
    for (std::size_t j = i + 1; j < points_.size(); ++j)
      if (points_[i] == points_[j])
        throw ContractError("Instance: points " + std::to_string(i) + " and " +
                            std::to_string(j) + " coincide");
}

Instance Instance::with_point(int i, Point p) const {
  std::vector<Point> pts = points_;
  pts[static_cast<std::size_t>(i)] = std::move(p);
  return Instance(d_, r_, std::move(pts));
}

Partition::Partition(std::vector<std::vector<int>> blocks, int n)
    : blocks_(std::move(blocks)), owner_(static_cast<std::size_t>(n), -1), n_(n) {
  for (auto& b : blocks_) std::sort(b.begin(), b.end());
  int covered = 0;
  for (std::size_t p = 0; p < blocks_.size(); ++p) {
    if (blocks_[p].empty()) throw ContractError("Partition: empty block");
    for (int i : blocks_[p]) {
      if (i < 0 || i >= n) throw ContractError("Partition: index out of range");
      if (owner_[static_cast<std::size_t>(i)] != -1)
        throw ContractError("Partition: index " + std::to_string(i) + " appears twice");
      owner_[static_cast<std::size_t>(i)] = static_cast<int>(p);
      ++covered;
    }
  }
  if (covered != n) throw ContractError("Partition: blocks do not cover [0, n)");
}

bool Partition::is_proper(int d) const {
  for (const auto& b : blocks_)
    if (b.empty() || static_cast<int>(b.size()) > d + 1) return false;
  return true;
}

Partition Partition::with_point_moved(int h, int p) const {
  auto blocks = blocks_;
  int q = block_of(h);
  auto& src = blocks[static_cast<std::size_t>(q)];
  src.erase(std::find(src.begin(), src.end(), h));
  blocks[static_cast<std::size_t>(p)].push_back(h);
  return Partition(std::move(blocks), n_);
}

std::vector<std::vector<int>> Partition::canonical_blocks() const {
  auto blocks = blocks_;
  std::sort(blocks.begin(), blocks.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              return a.front() < b.front();
            });
  return blocks;
}

namespace detail {

TverbergSystem assemble_system(const std::vector<Point>& points, int d,
                               const std::vector<std::vector<int>>& blocks,
                               const std::optional<PointOverride>& override_point) {
  const int n = static_cast<int>(points.size());
  const int r = static_cast<int>(blocks.size());
  const std::size_t size = static_cast<std::size_t>(n + d);

  TverbergSystem sys{RatMatrix(size, size), RatVector(size), std::vector<int>(n, -1)};

  auto coord = [&](int i, int c) -> const Rat& {
    if (override_point && override_point->index == i)
      return override_point->position[static_cast<std::size_t>(c)];
    return points[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
  };

  int col = 0;
  for (int p = 0; p < r; ++p) {
    const std::size_t row0 = static_cast<std::size_t>(p * (d + 1));
    for (int i : blocks[static_cast<std::size_t>(p)]) {
      for (int c = 0; c < d; ++c)
        sys.matrix.at(row0 + static_cast<std::size_t>(c), static_cast<std::size_t>(col)) =
            coord(i, c);
      sys.matrix.at(row0 + static_cast<std::size_t>(d), static_cast<std::size_t>(col)) = Rat(1);
      sys.column_of_point[static_cast<std::size_t>(i)] = col;
      ++col;
    }
    // -I_d slice for this block in the trailing d columns.
    for (int c = 0; c < d; ++c)
      sys.matrix.at(row0 + static_cast<std::size_t>(c), static_cast<std::size_t>(n + c)) =
          Rat(-1);
    sys.rhs[row0 + static_cast<std::size_t>(d)] = Rat(1);
  }
  return sys;
}

} // namespace detail

TverbergSystem build_system(const Instance& inst, const Partition& part,
                            const std::optional<PointOverride>& override_point) {
  if (part.total_points() != inst.size() || part.block_count() != inst.parts())
    throw ContractError("build_system: partition does not match instance");
  if (!part.is_proper(inst.dim()))
    throw ContractError("build_system: partition is not proper (needs 1 <= |J_p| <= d+1)");
  if (override_point) {
    if (override_point->index < 0 || override_point->index >= inst.size())
      throw ContractError("build_system: override index out of range");
    if (static_cast<int>(override_point->position.size()) != inst.dim())
      throw ContractError("build_system: override dimension mismatch");
  }
  return detail::assemble_system(inst.points(), inst.dim(), part.blocks(), override_point);
}

Rat replaced_column_det(const TverbergSystem& sys, int point_index) {
  if (point_index < 0 || point_index >= static_cast<int>(sys.column_of_point.size()))
    throw ContractError("replaced_column_det: point index out of range");
  RatMatrix m = sys.matrix;
  m.set_column(static_cast<std::size_t>(sys.column_of_point[static_cast<std::size_t>(point_index)]),
               sys.rhs);
  return det(m);
}

Certificate solve_partition(const Instance& inst, const Partition& part,
                            const std::optional<PointOverride>& override_point) {
  TverbergSystem sys = build_system(inst, part, override_point);
  RatVector x;
  try {
    x = solve_linear(sys.matrix, sys.rhs);
  } catch (const SingularSystemError&) {
    throw SingularSystemError(
        "solve_partition: affine hulls of the blocks do not meet in a single point "
        "(degenerate input)");
  }

  const int n = inst.size();
  const int d = inst.dim();
  Certificate cert;
  cert.alpha.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    cert.alpha[static_cast<std::size_t>(i)] =
        x[static_cast<std::size_t>(sys.column_of_point[static_cast<std::size_t>(i)])];
  cert.z.assign(x.begin() + n, x.begin() + n + d);
  cert.strict = true;
  for (const Rat& a : cert.alpha)
    if (a.sign() <= 0) cert.strict = false;
  return cert;
}

VerifyResult verify_certificate(const Instance& inst, const Partition& part,
                                const Certificate& cert, bool require_strict) {
  const int n = inst.size();
  const int d = inst.dim();
  if (part.total_points() != n || part.block_count() != inst.parts())
    return {false, "partition does not match instance"};
  if (!part.is_proper(d)) return {false, "partition is not proper"};
  if (static_cast<int>(cert.alpha.size()) != n) return {false, "alpha length mismatch"};
  if (static_cast<int>(cert.z.size()) != d) return {false, "z dimension mismatch"};

  for (int i = 0; i < n; ++i) {
    const Rat& a = cert.alpha[static_cast<std::size_t>(i)];
    if (a.sign() < 0 || (require_strict && a.sign() == 0))
      return {false, "alpha[" + std::to_string(i) + "] violates the sign constraint"};
  }
  for (int p = 0; p < part.block_count(); ++p) {
    Rat sum;
    RatVector combo(static_cast<std::size_t>(d));
    for (int i : part.block(p)) {
      const Rat& a = cert.alpha[static_cast<std::size_t>(i)];
      sum += a;
      for (int c = 0; c < d; ++c)
        combo[static_cast<std::size_t>(c)] +=
            a * inst.point(i)[static_cast<std::size_t>(c)];
    }
    if (sum != Rat(1))
      return {false, "block " + std::to_string(p) + " coefficient sum != 1"};
    if (combo != cert.z)
      return {false, "block " + std::to_string(p) + " combination differs from z"};
  }
  return {true, ""};
}

} // namespace tverberg
