#pragma once

#include <string>
#include <vector>

#include "core/model.hpp"

namespace tverberg {

// Indices of the convex hull of pts in counterclockwise order, computed with
// exact arithmetic (monotone chain). Collinear interior points are dropped;
// one or two distinct points hull to themselves.
std::vector<int> convex_hull(const std::vector<Point>& pts);

// Static SVG of a planar result: one hull polygon per block, every point
// labeled with its index, and a marker on the common point z. Coordinates
// become doubles only in the printed output. Throws UnsupportedError unless
// the instance has d = 2.
std::string render_svg(const Instance& inst, const Partition& part, const RatVector& z);

} // namespace tverberg
