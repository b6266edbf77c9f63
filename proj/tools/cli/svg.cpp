#include "svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace monoseq::cli {

namespace {

constexpr double kSize = 640.0;
constexpr double kMargin = 40.0;
constexpr std::array<const char*, 8> kPalette{"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                              "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

const char* colour(std::size_t i) { return kPalette[i % kPalette.size()]; }

std::string fmt(double v, int precision) {
  if (v == 0.0) v = 0.0;  // no "-0"
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, v);
  return buf;
}

class Frame {
 public:
  // `uniform` keeps the aspect ratio; otherwise each axis fills the canvas.
  Frame(double xmin, double xmax, double ymin, double ymax, int precision, bool uniform = true)
      : xmin_(xmin), ymin_(ymin), precision_(precision) {
    const double w = std::max(xmax - xmin, 1e-9);
    const double h = std::max(ymax - ymin, 1e-9);
    xscale_ = (kSize - 2 * kMargin) / w;
    yscale_ = (kSize - 2 * kMargin) / h;
    if (uniform) xscale_ = yscale_ = std::min(xscale_, yscale_);
  }

  [[nodiscard]] std::string x(double v) const { return fmt(kMargin + (v - xmin_) * xscale_, precision_); }
  [[nodiscard]] std::string y(double v) const { return fmt(kSize - kMargin - (v - ymin_) * yscale_, precision_); }

 private:
  double xmin_;
  double ymin_;
  double xscale_ = 1.0;
  double yscale_ = 1.0;
  int precision_;
};

std::string header() {
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"640\" viewBox=\"0 0 640 640\">\n"
     << "<defs><marker id=\"head\" markerWidth=\"8\" markerHeight=\"8\" refX=\"6\" refY=\"3\" orient=\"auto\">"
     << "<path d=\"M0,0 L6,3 L0,6 z\" fill=\"context-stroke\"/></marker></defs>\n"
     << "<rect width=\"640\" height=\"640\" fill=\"white\"/>\n";
  return os.str();
}

}  // namespace

std::string render_primal(const PointSet& pts, const std::vector<Direction>& dirs, const PathSet& paths,
                          int precision) {
  std::vector<double> xs;
  std::vector<double> ys;
  for (const auto& p : pts.points()) {
    xs.push_back(p.x.to_double());
    ys.push_back(p.y.to_double());
  }
  const auto [xmin, xmax] = std::minmax_element(xs.begin(), xs.end());
  const auto [ymin, ymax] = std::minmax_element(ys.begin(), ys.end());
  const Frame f(*xmin, *xmax, *ymin, *ymax, precision);

  std::ostringstream os;
  os << header();
  for (std::size_t i = 0; i < paths.paths().size(); ++i) {
    os << "<polyline fill=\"none\" stroke=\"" << colour(i) << "\" stroke-width=\"1.5\" points=\"";
    bool first = true;
    for (int v : paths[i].order()) {
      const auto s = static_cast<std::size_t>(v - 1);
      os << (first ? "" : " ") << f.x(xs[s]) << ',' << f.y(ys[s]);
      first = false;
    }
    os << "\"/>\n";
  }
  for (std::size_t s = 0; s < xs.size(); ++s) {
    os << "<circle cx=\"" << f.x(xs[s]) << "\" cy=\"" << f.y(ys[s]) << "\" r=\"4\" fill=\"black\"/>\n";
    os << "<text x=\"" << f.x(xs[s]) << "\" y=\"" << f.y(ys[s]) << "\" dx=\"6\" dy=\"-6\" font-size=\"12\">" << s + 1
       << "</text>\n";
  }
  const double cx = kSize - 50.0;
  const double cy = 50.0;
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    const double dx = dirs[i].dx().to_double();
    const double dy = dirs[i].dy().to_double();
    const double len = std::hypot(dx, dy);
    os << "<line x1=\"" << fmt(cx, precision) << "\" y1=\"" << fmt(cy, precision) << "\" x2=\""
       << fmt(cx + 35.0 * dx / len, precision) << "\" y2=\"" << fmt(cy - 35.0 * dy / len, precision) << "\" stroke=\"" << colour(i)
       << "\" stroke-width=\"2\" marker-end=\"url(#head)\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string render_dual(const PointSet& pts, const std::vector<Direction>& dirs, int precision) {
  std::vector<std::pair<std::size_t, double>> verticals;
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    if (auto x = direction_to_vertical(dirs[i])) verticals.emplace_back(i, x->to_double());
  }
  double lo = -1.0;
  double hi = 1.0;
  if (!verticals.empty()) {
    lo = hi = verticals.front().second;
    for (const auto& [i, x] : verticals) {
      lo = std::min(lo, x);
      hi = std::max(hi, x);
    }
    const double pad = std::max((hi - lo) * 0.25, 1.0);
    lo -= pad;
    hi += pad;
  }
  const auto lines = pts.duals();
  std::vector<std::pair<double, double>> ends;
  double ymin = 0.0;
  double ymax = 0.0;
  bool first = true;
  for (const auto& l : lines) {
    const double m = l.slope.to_double();
    const double b = l.intercept.to_double();
    ends.emplace_back(m * lo + b, m * hi + b);
    for (double y : {ends.back().first, ends.back().second}) {
      ymin = first ? y : std::min(ymin, y);
      ymax = first ? y : std::max(ymax, y);
      first = false;
    }
  }
  const Frame f(lo, hi, ymin, ymax, precision, false);

  std::ostringstream os;
  os << header();
  for (const auto& [i, x] : verticals) {
    os << "<line x1=\"" << f.x(x) << "\" y1=\"" << f.y(ymin) << "\" x2=\"" << f.x(x) << "\" y2=\"" << f.y(ymax)
       << "\" stroke=\"" << colour(i) << "\" stroke-dasharray=\"6,4\" stroke-width=\"1.5\"/>\n";
    os << "<text x=\"" << f.x(x) << "\" y=\"" << f.y(ymax) << "\" dy=\"-8\" font-size=\"12\" fill=\"" << colour(i)
       << "\">phi" << i + 1 << "</text>\n";
  }
  for (std::size_t s = 0; s < lines.size(); ++s) {
    os << "<line x1=\"" << f.x(lo) << "\" y1=\"" << f.y(ends[s].first) << "\" x2=\"" << f.x(hi) << "\" y2=\""
       << f.y(ends[s].second) << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    os << "<text x=\"" << f.x(hi) << "\" y=\"" << f.y(ends[s].second) << "\" dx=\"4\" font-size=\"12\">" << s + 1
       << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace monoseq::cli
