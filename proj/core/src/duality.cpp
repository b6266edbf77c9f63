#include "monoseq/duality.hpp"

#include "monoseq/errors.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace monoseq {

namespace {

std::vector<int> labels(int n) {
  std::vector<int> idx(static_cast<std::size_t>(n));
  std::iota(idx.begin(), idx.end(), 1);
  return idx;
}

// Sorts labels by key (ascending when `ascending`), reporting the first tie.
template <typename Tie>
std::vector<int> sort_by_key(const std::vector<Rat>& key, bool ascending) {
  auto idx = labels(static_cast<int>(key.size()));
  const auto k = [&](int label) -> const Rat& { return key[static_cast<std::size_t>(label - 1)]; };
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return ascending ? k(a) < k(b) : k(b) < k(a); });
  for (std::size_t i = 1; i < idx.size(); ++i) {
    if (k(idx[i - 1]) == k(idx[i])) throw Tie(std::min(idx[i - 1], idx[i]), std::max(idx[i - 1], idx[i]));
  }
  return idx;
}

}  // namespace

PointSet::PointSet(std::vector<Point2> points) : points_(std::move(points)) {
  if (points_.size() < 2) throw std::invalid_argument("point set needs at least 2 points");
  for (std::size_t i = 0; i < points_.size(); ++i) {
    for (std::size_t j = i + 1; j < points_.size(); ++j) {
      if (points_[i] == points_[j]) {
        throw std::invalid_argument("points " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " coincide");
      }
    }
  }
}

std::vector<DualLine> PointSet::duals() const {
  std::vector<DualLine> out;
  out.reserve(points_.size());
  for (const auto& p : points_) out.push_back(point_to_dual(p));
  return out;
}

VerticalLineConfig::VerticalLineConfig(std::vector<Rat> xs) : xs_(std::move(xs)) {
  if (xs_.empty()) throw std::invalid_argument("vertical line configuration is empty");
  for (std::size_t i = 1; i < xs_.size(); ++i) {
    if (!(xs_[i - 1] < xs_[i])) throw std::invalid_argument("vertical line x-coordinates must strictly increase");
  }
}

std::optional<Rat> direction_to_vertical(const Direction& v) {
  if (v.is_horizontal()) return std::nullopt;
  return -v.dx() / v.dy();
}

Direction vertical_to_direction(const Rat& x_phi) { return Direction(-x_phi, Rat(1)); }

PathPerm projection_order(const PointSet& pts, const Direction& v) {
  std::vector<Rat> key;
  key.reserve(static_cast<std::size_t>(pts.size()));
  for (const auto& p : pts.points()) key.push_back(dot(p, v));
  return PathPerm(sort_by_key<ProjectionTie>(key, true));
}

PathPerm intersection_order(std::span<const DualLine> lines, const Rat& x) {
  std::vector<Rat> key;
  key.reserve(lines.size());
  for (const auto& l : lines) key.push_back(l.at(x));
  return PathPerm(sort_by_key<OrdinateTie>(key, false));
}

PathPerm slope_order(std::span<const DualLine> lines) {
  std::vector<Rat> key;
  key.reserve(lines.size());
  for (const auto& l : lines) key.push_back(l.slope);
  return PathPerm(sort_by_key<OrdinateTie>(key, false));
}

// Points (x, m x + b) map to (X, Y) with x = c - 1/X, so Y = (m c + b) X - m.
DualLine ProjectiveMap::apply(const DualLine& l) const { return DualLine{l.at(c_), -l.slope}; }

DualLine ProjectiveMap::invert(const DualLine& l) const {
  const Rat m = -l.intercept;
  return DualLine{m, l.slope - m * c_};
}

Rat ProjectiveMap::apply_vertical(const Rat& d) const {
  if (d == c_) throw DegenerateMap("vertical line x = " + d.str() + " is sent to infinity");
  return (c_ - d).inverse();
}

Rat ProjectiveMap::invert_vertical(const Rat& x) const {
  if (x.is_zero()) throw DegenerateMap("x = 0 is the image of the line at infinity");
  return c_ - x.inverse();
}

std::pair<std::vector<DualLine>, std::vector<Rat>> send_to_infinity(std::span<const DualLine> lines,
                                                                    const ProjectiveMap& map,
                                                                    std::span<const Rat> probes) {
  std::vector<Rat> mapped_probes;
  mapped_probes.reserve(probes.size());
  for (const auto& d : probes) mapped_probes.push_back(map.apply_vertical(d));
  std::vector<DualLine> mapped_lines;
  mapped_lines.reserve(lines.size());
  for (const auto& l : lines) mapped_lines.push_back(map.apply(l));
  return {std::move(mapped_lines), std::move(mapped_probes)};
}

}  // namespace monoseq
