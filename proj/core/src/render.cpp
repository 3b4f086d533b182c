#include "polydescent/render.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace polydescent {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string rgb(double r, double g, double b) {
  auto c = [](double x) { return static_cast<int>(std::lround(std::clamp(x, 0.0, 1.0) * 255.0)); };
  char buf[16];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", c(r), c(g), c(b));
  return buf;
}

std::string hsv(double h, double s, double v) {
  h = h - std::floor(h);
  double i = std::floor(h * 6.0);
  double f = h * 6.0 - i;
  double p = v * (1 - s), q = v * (1 - f * s), t = v * (1 - (1 - f) * s);
  switch (static_cast<int>(i) % 6) {
    case 0: return rgb(v, t, p);
    case 1: return rgb(q, v, p);
    case 2: return rgb(p, v, t);
    case 3: return rgb(p, q, v);
    case 4: return rgb(t, p, v);
    default: return rgb(v, p, q);
  }
}

// Maps the square [center - h, center + h]^2 onto [0, width]^2 with y up.
struct Frame {
  Complex center;
  double half = 1.0;
  int width = 800;

  double x(Complex z) const { return (z.real() - center.real() + half) / (2 * half) * width; }
  double y(Complex z) const { return (center.imag() + half - z.imag()) / (2 * half) * width; }
  Complex at(double px, double py) const {
    return {center.real() - half + px / width * 2 * half, center.imag() + half - py / width * 2 * half};
  }
};

Frame frame_for(const DescentTree& tree, int width) {
  double lo_x = 1e300, hi_x = -1e300, lo_y = 1e300, hi_y = -1e300;
  auto take = [&](Complex z) {
    lo_x = std::min(lo_x, z.real());
    hi_x = std::max(hi_x, z.real());
    lo_y = std::min(lo_y, z.imag());
    hi_y = std::max(hi_y, z.imag());
  };
  for (const auto& v : tree.vertices) take(v.location);
  for (const auto& e : tree.edges)
    for (const auto& s : e.path.samples) take(s.z);
  if (lo_x > hi_x) return {{0, 0}, 1.0, width};
  double half = 0.55 * std::max({hi_x - lo_x, hi_y - lo_y, 1e-6 * tree.scale});
  return {{0.5 * (lo_x + hi_x), 0.5 * (lo_y + hi_y)}, half, width};
}

void background(std::ostringstream& out, const Frame& fr, const AnalyticTarget& target, Background mode,
                int cells) {
  if (mode == Background::none || cells <= 0) return;
  double cell = static_cast<double>(fr.width) / cells;
  std::vector<double> logs;
  std::vector<Complex> values(static_cast<std::size_t>(cells) * cells);
  for (int iy = 0; iy < cells; ++iy) {
    for (int ix = 0; ix < cells; ++ix) {
      Complex z = fr.at((ix + 0.5) * cell, (iy + 0.5) * cell);
      Complex w = target.in_domain(z) ? target.value(z) : Complex(std::nan(""), 0);
      values[static_cast<std::size_t>(iy) * cells + ix] = w;
      if (is_finite(w) && std::abs(w) > 0) logs.push_back(std::log(std::abs(w)));
    }
  }
  double lo = 0, hi = 1;
  if (!logs.empty()) {
    std::sort(logs.begin(), logs.end());
    lo = logs[logs.size() / 50];
    hi = logs[logs.size() - 1 - logs.size() / 50];
    if (hi <= lo) hi = lo + 1;
  }
  out << "<g shape-rendering=\"crispEdges\">\n";
  for (int iy = 0; iy < cells; ++iy) {
    for (int ix = 0; ix < cells; ++ix) {
      Complex w = values[static_cast<std::size_t>(iy) * cells + ix];
      std::string color;
      if (!is_finite(w)) {
        color = "#ffffff";
      } else if (mode == Background::phase) {
        color = hsv(std::arg(w) / two_pi, 0.55, 0.95);
      } else {
        double g = std::abs(w) > 0 ? (std::log(std::abs(w)) - lo) / (hi - lo) : 0.0;
        color = rgb(0.25 + 0.75 * g, 0.25 + 0.75 * g, 0.35 + 0.65 * g);
      }
      out << "<rect x=\"" << fmt(ix * cell) << "\" y=\"" << fmt(iy * cell) << "\" width=\"" << fmt(cell + 0.5)
          << "\" height=\"" << fmt(cell + 0.5) << "\" fill=\"" << color << "\"/>\n";
    }
  }
  out << "</g>\n";
}

}  // namespace

std::string tree_to_dot(const DescentTree& tree) {
  std::ostringstream out;
  out << "graph descent_tree {\n";
  out << "  node [fontsize=10];\n";
  for (const auto& v : tree.vertices) {
    out << "  " << v.label << " [shape=" << (v.kind == PointKind::root ? "circle" : "box") << ", pos=\""
        << fmt(v.location.real()) << "," << fmt(v.location.imag()) << "!\"";
    if (v.multiplicity > 1) out << ", xlabel=\"" << v.multiplicity << "\"";
    out << "];\n";
  }
  for (const auto& e : tree.edges) {
    out << "  " << tree.vertices[e.from].label << " -- " << tree.vertices[e.to].label << " [label=\"b" << e.branch
        << "\", len=\"" << fmt(e.path.arc_length) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string tree_to_svg(const DescentTree& tree, const AnalyticTarget& target, const SvgOptions& options) {
  Frame fr = frame_for(tree, options.width);
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fr.width << "\" height=\"" << fr.width
      << "\" viewBox=\"0 0 " << fr.width << " " << fr.width << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
  background(out, fr, target, options.background, options.background_cells);

  if (!options.hull.empty()) {
    out << "<polygon fill=\"none\" stroke=\"#888888\" stroke-dasharray=\"4 3\" points=\"";
    for (Complex z : options.hull) out << fmt(fr.x(z)) << "," << fmt(fr.y(z)) << " ";
    out << "\"/>\n";
  }
  for (const auto& e : tree.edges) {
    out << "<polyline fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"1.5\" points=\"";
    for (const auto& s : e.path.samples) out << fmt(fr.x(s.z)) << "," << fmt(fr.y(s.z)) << " ";
    out << "\"/>\n";
  }
  for (const auto& v : tree.vertices) {
    double x = fr.x(v.location), y = fr.y(v.location);
    if (v.kind == PointKind::root) {
      double radius = 3.0 + 1.5 * v.multiplicity;
      out << "<circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(y) << "\" r=\"" << fmt(radius)
          << "\" fill=\"#c0392b\"/>\n";
    } else {
      out << "<rect x=\"" << fmt(x - 4) << "\" y=\"" << fmt(y - 4)
          << "\" width=\"8\" height=\"8\" fill=\"#27ae60\"/>\n";
    }
    out << "<text x=\"" << fmt(x + 7) << "\" y=\"" << fmt(y - 7) << "\" font-size=\"11\">" << v.label
        << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string level_set_to_svg(const LevelSetGrid& grid, const FactoredPolynomial& poly, int width) {
  Frame fr{grid.center, grid.half_width, width};
  double cell = static_cast<double>(width) / grid.resolution;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << width
      << "\" viewBox=\"0 0 " << width << " " << width << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
  out << "<g shape-rendering=\"crispEdges\">\n";
  // Runs of equal labels per row keep the file small at high resolutions.
  for (int iy = 0; iy < grid.resolution; ++iy) {
    int row = grid.resolution - 1 - iy;  // grid rows grow upward
    int ix = 0;
    while (ix < grid.resolution) {
      int label = grid.labels[static_cast<std::size_t>(row) * grid.resolution + ix];
      int end = ix + 1;
      while (end < grid.resolution && grid.labels[static_cast<std::size_t>(row) * grid.resolution + end] == label)
        ++end;
      if (label >= 0) {
        double hue = std::fmod(label * 0.61803398875, 1.0);
        out << "<rect x=\"" << fmt(ix * cell) << "\" y=\"" << fmt(iy * cell) << "\" width=\""
            << fmt((end - ix) * cell + 0.5) << "\" height=\"" << fmt(cell + 0.5) << "\" fill=\""
            << hsv(hue, 0.6, 0.9) << "\"/>\n";
      }
      ix = end;
    }
  }
  out << "</g>\n";
  for (const auto& r : poly.roots()) {
    out << "<circle cx=\"" << fmt(fr.x(r.location)) << "\" cy=\"" << fmt(fr.y(r.location))
        << "\" r=\"3\" fill=\"#000000\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace polydescent
