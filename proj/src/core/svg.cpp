#include "core/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>

#include "core/errors.hpp"

namespace tverberg {

namespace {

// Sign of the cross product (a - o) x (b - o); positive for a left turn.
int cross_sign(const Point& o, const Point& a, const Point& b) {
  Rat v = (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
  return v.sign();
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s(buf);
  if (s == "-0.00") s = "0.00";
  return s;
}

} // namespace

std::vector<int> convex_hull(const std::vector<Point>& pts) {
  const int n = static_cast<int>(pts.size());
  for (const Point& p : pts)
    if (p.size() != 2) throw DimensionError("convex_hull: points must be planar");

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int i, int j) {
    const Point& a = pts[static_cast<std::size_t>(i)];
    const Point& b = pts[static_cast<std::size_t>(j)];
    if (a[0] != b[0]) return a[0] < b[0];
    return a[1] < b[1];
  });
  order.erase(std::unique(order.begin(), order.end(),
                          [&](int i, int j) {
                            return pts[static_cast<std::size_t>(i)] ==
                                   pts[static_cast<std::size_t>(j)];
                          }),
              order.end());
  if (order.size() <= 2) return order;

  auto build = [&](std::vector<int>& out, int idx) {
    const Point& p = pts[static_cast<std::size_t>(idx)];
    while (out.size() >= 2 &&
           cross_sign(pts[static_cast<std::size_t>(out[out.size() - 2])],
                      pts[static_cast<std::size_t>(out.back())], p) <= 0)
      out.pop_back();
    out.push_back(idx);
  };

  std::vector<int> lower, upper;
  for (int idx : order) build(lower, idx);
  for (auto it = order.rbegin(); it != order.rend(); ++it) build(upper, *it);
  lower.pop_back();
  upper.pop_back();
  lower.insert(lower.end(), upper.begin(), upper.end());
  return lower;
}

std::string render_svg(const Instance& inst, const Partition& part, const RatVector& z) {
  if (inst.dim() != 2)
    throw UnsupportedError("render_svg: only d = 2 instances can be drawn, got d = " +
                           std::to_string(inst.dim()));
  if (z.size() != 2) throw DimensionError("render_svg: z must have 2 coordinates");

  static const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                   "#ff7f0e", "#8c564b", "#17becf", "#e377c2"};
  constexpr int kPaletteSize = 8;
  constexpr double kSize = 640.0, kMargin = 48.0;

  // Exact bounding box over the points and z; doubles enter only below.
  Rat lox = inst.point(0)[0], hix = lox, loy = inst.point(0)[1], hiy = loy;
  auto widen = [&](const RatVector& p) {
    if (p[0] < lox) lox = p[0];
    if (p[0] > hix) hix = p[0];
    if (p[1] < loy) loy = p[1];
    if (p[1] > hiy) hiy = p[1];
  };
  for (int i = 1; i < inst.size(); ++i) widen(inst.point(i));
  widen(z);

  const double dx = (hix - lox).to_double(), dy = (hiy - loy).to_double();
  const double span = kSize - 2 * kMargin;
  const double scale = std::min(dx > 0 ? span / dx : span, dy > 0 ? span / dy : span);
  const double ox = lox.to_double(), oy = loy.to_double();
  auto sx = [&](const Rat& x) { return kMargin + (x.to_double() - ox) * scale; };
  auto sy = [&](const Rat& y) { return kSize - kMargin - (y.to_double() - oy) * scale; };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"640\" "
         "viewBox=\"0 0 640 640\">\n";
  svg += "<rect width=\"640\" height=\"640\" fill=\"white\"/>\n";

  for (int p = 0; p < part.block_count(); ++p) {
    const std::vector<int>& block = part.block(p);
    std::vector<Point> pts;
    pts.reserve(block.size());
    for (int i : block) pts.push_back(inst.point(i));
    std::vector<int> hull = convex_hull(pts);

    const char* color = kPalette[p % kPaletteSize];
    std::string coords, idxs;
    for (int local : hull) {
      if (!coords.empty()) { coords += ' '; idxs += ','; }
      const Point& pt = pts[static_cast<std::size_t>(local)];
      coords += fmt(sx(pt[0])) + "," + fmt(sy(pt[1]));
      idxs += std::to_string(block[static_cast<std::size_t>(local)]);
    }
    svg += "<polygon class=\"hull\" id=\"hull-" + std::to_string(p) +
           "\" data-points=\"" + idxs + "\" points=\"" + coords + "\" fill=\"" + color +
           "\" fill-opacity=\"0.2\" stroke=\"" + color + "\" stroke-width=\"2\"/>\n";
  }

  for (int i = 0; i < inst.size(); ++i) {
    const Point& pt = inst.point(i);
    const char* color = kPalette[part.block_of(i) % kPaletteSize];
    std::string cx = fmt(sx(pt[0])), cy = fmt(sy(pt[1]));
    svg += "<circle class=\"point\" id=\"point-" + std::to_string(i) + "\" cx=\"" + cx +
           "\" cy=\"" + cy + "\" r=\"5\" fill=\"" + color + "\"/>\n";
    svg += "<text class=\"label\" x=\"" + fmt(sx(pt[0]) + 8) + "\" y=\"" +
           fmt(sy(pt[1]) - 8) + "\" font-family=\"sans-serif\" font-size=\"14\">" +
           std::to_string(i) + "</text>\n";
  }

  std::string zx = fmt(sx(z[0])), zy = fmt(sy(z[1]));
  svg += "<g class=\"z-marker\" stroke=\"black\" stroke-width=\"2\">\n";
  svg += "<line x1=\"" + fmt(sx(z[0]) - 9) + "\" y1=\"" + zy + "\" x2=\"" +
         fmt(sx(z[0]) + 9) + "\" y2=\"" + zy + "\"/>\n";
  svg += "<line x1=\"" + zx + "\" y1=\"" + fmt(sy(z[1]) - 9) + "\" x2=\"" + zx +
         "\" y2=\"" + fmt(sy(z[1]) + 9) + "\"/>\n";
  svg += "<circle cx=\"" + zx + "\" cy=\"" + zy +
         "\" r=\"6\" fill=\"none\" stroke=\"black\"/>\n";
  svg += "</g>\n";
  svg += "<text x=\"" + fmt(sx(z[0]) + 10) + "\" y=\"" + fmt(sy(z[1]) + 16) +
         "\" font-family=\"sans-serif\" font-size=\"14\">z</text>\n";
  svg += "</svg>\n";
  return svg;
}

} // namespace tverberg
