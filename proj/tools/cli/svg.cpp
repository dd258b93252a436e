#include "svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

#include "galtrop/errors.hpp"

namespace galtrop::cli {

namespace {

constexpr std::array<const char*, 8> kPalette{"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                              "#ff7f0e", "#17becf", "#8c564b", "#e377c2"};

struct Point {
  double x;
  double y;
};

Point to_point(const RationalVector& v) { return {v[0].get_d(), v[1].get_d()}; }

// End of the ray p + s·d on the square of half-width `clip`, or a unit stub when p is outside.
Point clipped_end(Point p, const IntVector& d, double clip) {
  const double dx = static_cast<double>(d[0]), dy = static_cast<double>(d[1]);
  const double norm = std::max(std::abs(dx), std::abs(dy));
  if (std::max(std::abs(p.x), std::abs(p.y)) >= clip) return {p.x + dx / norm, p.y + dy / norm};
  double s = std::numeric_limits<double>::infinity();
  if (dx != 0) s = std::min(s, ((dx > 0 ? clip : -clip) - p.x) / dx);
  if (dy != 0) s = std::min(s, ((dy > 0 ? clip : -clip) - p.y) / dy);
  return {p.x + s * dx, p.y + s * dy};
}

class Canvas {
 public:
  Canvas(double half_width, double scale) : half_(half_width), scale_(scale) {}

  std::string header() const {
    const double size = 2 * half_ * scale_;
    return format(
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"%.4f\" height=\"%.4f\" "
        "viewBox=\"0 0 %.4f %.4f\">\n<rect width=\"100%%\" height=\"100%%\" fill=\"white\"/>\n",
        size, size, size, size);
  }

  std::string line(Point a, Point b, const char* color, int weight) const {
    return format("<line x1=\"%.4f\" y1=\"%.4f\" x2=\"%.4f\" y2=\"%.4f\" stroke=\"%s\" stroke-width=\"%d\"/>\n",
                  sx(a.x), sy(a.y), sx(b.x), sy(b.y), color, 1 + weight);
  }

  std::string dot(Point p, bool hollow) const {
    return format("<circle cx=\"%.4f\" cy=\"%.4f\" r=\"4.0000\" fill=\"%s\" stroke=\"black\"/>\n", sx(p.x), sy(p.y),
                  hollow ? "white" : "black");
  }

 private:
  template <typename... Args>
  static std::string format(const char* fmt, Args... args) {
    const int n = std::snprintf(nullptr, 0, fmt, args...);
    std::string out(static_cast<std::size_t>(n) + 1, '\0');
    std::snprintf(out.data(), out.size(), fmt, args...);
    out.pop_back();
    return out;
  }
  double sx(double x) const { return (x + half_) * scale_; }
  double sy(double y) const { return (half_ - y) * scale_; }

  double half_;
  double scale_;
};

}  // namespace

std::string render_svg(const TropicalComplex& c, const std::vector<int>& orbit_of, const SvgOptions& options) {
  if (c.rank != 2) throw PreconditionError("only rank-2 complexes can be drawn");
  if (!(options.clip > 0)) throw PreconditionError("clip radius must be positive");
  const Canvas canvas(options.clip + 1, options.scale);
  auto color = [&](std::size_t cell) { return kPalette[(cell < orbit_of.size() ? orbit_of[cell] : 0) % kPalette.size()]; };

  std::string body;
  std::string dots;
  for (std::size_t i = 0; i < c.edges.size(); ++i) {
    const Edge& e = c.edges[i];
    if (!c.vertices[e.tail].is_interior() || !c.vertices[e.head].is_interior()) continue;
    body += canvas.line(to_point(c.vertices[e.tail].coords()), to_point(c.vertices[e.head].coords()), color(i), e.weight);
  }
  std::size_t capped = c.edges.size();
  for (const auto& r : c.rays) {
    const Point from = to_point(c.vertices[r.vertex].coords());
    const Point to = clipped_end(from, r.direction, options.clip);
    body += canvas.line(from, to, r.boundary ? color(capped) : kPalette[0], r.weight);
    if (r.boundary) {
      dots += canvas.dot(to, true);
      ++capped;
    }
  }
  for (const auto& v : c.vertices) {
    if (v.is_interior()) dots += canvas.dot(to_point(v.coords()), false);
  }
  return canvas.header() + body + dots + "</svg>\n";
}

}  // namespace galtrop::cli
