#include "swanson/cli/plot.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

#include "swanson/cli/serialize.hpp"
#include "swanson/errors.hpp"

namespace swanson::cli {
namespace {

constexpr int kDeepestLevel = -16;

std::string num(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

struct Box {
  double x0 = std::numeric_limits<double>::infinity();
  double x1 = -std::numeric_limits<double>::infinity();
  double y0 = std::numeric_limits<double>::infinity();
  double y1 = -std::numeric_limits<double>::infinity();

  void add(double x, double y) {
    if (!std::isfinite(x) || !std::isfinite(y)) return;
    x0 = std::min(x0, x);
    x1 = std::max(x1, x);
    y0 = std::min(y0, y);
    y1 = std::max(y1, y);
  }
  bool empty() const { return !(x0 <= x1); }
};

BoundaryPoint lerp(double xa, double ya, double va, double xb, double yb, double vb, double level) {
  const double t = (va == vb) ? 0.5 : (level - va) / (vb - va);
  return {xa + t * (xb - xa), ya + t * (yb - ya)};
}

}  // namespace

std::vector<ContourLevel> contour_levels(const PseudospectrumGrid& grid) {
  const int n = grid.resolution;
  if (n < 2 || grid.sigma_min.size() != static_cast<std::size_t>(n) * n) return {};
  std::vector<double> v(grid.sigma_min.size());
  double lowest = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < v.size(); ++k) {
    const double s = grid.sigma_min[k];
    v[k] = s > 0.0 ? std::log10(s) : std::log10(std::numeric_limits<double>::min());
    lowest = std::min(lowest, v[k]);
  }
  auto val = [&](int ix, int iy) { return v[static_cast<std::size_t>(iy) * n + ix]; };

  std::vector<ContourLevel> out;
  for (int level = -1; level >= kDeepestLevel && level > lowest; --level) {
    ContourLevel cl{level, {}};
    const double lv = level;
    for (int iy = 0; iy + 1 < n; ++iy) {
      for (int ix = 0; ix + 1 < n; ++ix) {
        const double xa = grid.re_at(ix), xb = grid.re_at(ix + 1);
        const double ya = grid.im_at(iy), yb = grid.im_at(iy + 1);
        // corners counter-clockwise from bottom-left
        const double c[4] = {val(ix, iy), val(ix + 1, iy), val(ix + 1, iy + 1), val(ix, iy + 1)};
        const double cx[4] = {xa, xb, xb, xa};
        const double cy[4] = {ya, ya, yb, yb};
        std::vector<BoundaryPoint> hits;
        for (int e = 0; e < 4; ++e) {
          const int f = (e + 1) % 4;
          if ((c[e] < lv) != (c[f] < lv)) hits.push_back(lerp(cx[e], cy[e], c[e], cx[f], cy[f], c[f], lv));
        }
        if (hits.size() == 2) {
          cl.segments.emplace_back(hits[0], hits[1]);
        } else if (hits.size() == 4) {
          // Saddle: resolve with the cell-centre average.
          const double centre = 0.25 * (c[0] + c[1] + c[2] + c[3]);
          if ((centre < lv) == (c[0] < lv)) {
            cl.segments.emplace_back(hits[0], hits[1]);
            cl.segments.emplace_back(hits[2], hits[3]);
          } else {
            cl.segments.emplace_back(hits[3], hits[0]);
            cl.segments.emplace_back(hits[1], hits[2]);
          }
        }
      }
    }
    if (!cl.segments.empty()) out.push_back(std::move(cl));
  }
  return out;
}

std::string render_svg(const PlotLayers& layers) {
  const bool has_grid = layers.contour.has_value() && !layers.contour->sigma_min.empty();
  if (!has_grid && layers.curve.empty() && layers.dots.empty()) {
    throw ContractViolation("plot: no data to draw");
  }

  Box box;
  if (has_grid) {
    box.add(layers.contour->re_range.lo, layers.contour->im_range.lo);
    box.add(layers.contour->re_range.hi, layers.contour->im_range.hi);
  }
  for (const auto& p : layers.curve) box.add(p.x, p.y);
  for (const auto& z : layers.dots) box.add(z.real(), z.imag());
  if (box.empty()) throw ContractViolation("plot: data has no finite coordinates");

  double w = box.x1 - box.x0;
  double h = box.y1 - box.y0;
  const double pad = 0.05 * std::max({w, h, 1.0});
  box.x0 -= pad;
  box.x1 += pad;
  box.y0 -= pad;
  box.y1 += pad;
  w = box.x1 - box.x0;
  h = box.y1 - box.y0;
  const double stroke = 0.002 * std::max(w, h);

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(box.x0) << ' ' << num(-box.y1) << ' '
     << num(w) << ' ' << num(h) << "\">\n";
  // Data coordinates with the imaginary axis pointing up.
  os << "<g transform=\"scale(1,-1)\" fill=\"none\" stroke=\"black\" stroke-width=\"" << num(stroke) << "\">\n";

  if (has_grid) {
    for (const auto& cl : contour_levels(*layers.contour)) {
      os << "<path data-level=\"" << cl.level << "\" d=\"";
      for (const auto& [a, b] : cl.segments) {
        os << 'M' << num(a.x) << ',' << num(a.y) << 'L' << num(b.x) << ',' << num(b.y);
      }
      os << "\"/>\n";
    }
  }

  if (!layers.curve.empty()) {
    os << "<path data-layer=\"curve\" d=\"";
    bool pen_down = false;
    for (const auto& p : layers.curve) {
      if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
        pen_down = false;
        continue;
      }
      os << (pen_down ? 'L' : 'M') << num(p.x) << ',' << num(p.y);
      pen_down = true;
    }
    os << "\"/>\n";
  }

  const double radius = 0.006 * std::max(w, h);
  for (const auto& z : layers.dots) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) continue;
    os << "<circle cx=\"" << num(z.real()) << "\" cy=\"" << num(z.imag()) << "\" r=\"" << num(radius)
       << "\" fill=\"black\"/>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

void emit_plot(const PlotLayers& layers, const std::filesystem::path& path) {
  write_atomic(path, render_svg(layers));
}

}  // namespace swanson::cli
