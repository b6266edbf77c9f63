#pragma once

#include "monoseq/geometry.hpp"
#include "monoseq/rational.hpp"

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace monoseq {

// Labeled primal points; point j (1-based) is vertex j.
class PointSet {
 public:
  // Throws std::invalid_argument on repeated points or fewer than 2 points.
  explicit PointSet(std::vector<Point2> points);

  [[nodiscard]] int size() const { return static_cast<int>(points_.size()); }
  [[nodiscard]] const std::vector<Point2>& points() const { return points_; }
  // 1-based access by vertex label.
  [[nodiscard]] const Point2& vertex(int label) const { return points_[static_cast<std::size_t>(label - 1)]; }
  [[nodiscard]] std::vector<DualLine> duals() const;

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::vector<Point2> points_;
};

// Dual vertical lines x_1 < ... < x_k.
class VerticalLineConfig {
 public:
  explicit VerticalLineConfig(std::vector<Rat> xs);

  [[nodiscard]] int k() const { return static_cast<int>(xs_.size()); }
  [[nodiscard]] const std::vector<Rat>& xs() const { return xs_; }
  [[nodiscard]] const Rat& x(int i) const { return xs_[static_cast<std::size_t>(i)]; }
  // q_i = x_{i+1} - x_i, i = 0..k-2.
  [[nodiscard]] Rat gap(int i) const { return xs_[static_cast<std::size_t>(i) + 1] - xs_[static_cast<std::size_t>(i)]; }

  friend bool operator==(const VerticalLineConfig&, const VerticalLineConfig&) = default;

 private:
  std::vector<Rat> xs_;
};

// x-coordinate of the dual vertical line of a direction: -dx/dy, i.e. -1/slope.
// A horizontal direction has no finite vertical line and yields nullopt; its
// order is the slope order of the dual lines.
std::optional<Rat> direction_to_vertical(const Direction& v);

// Upward-pointing direction whose dual vertical line is x = x_phi.
Direction vertical_to_direction(const Rat& x_phi);

// Vertex labels sorted by <p, v> ascending. Throws ProjectionTie.
PathPerm projection_order(const PointSet& pts, const Direction& v);

// Line labels (1-based) sorted by their ordinate at x, highest first.
// Throws OrdinateTie.
PathPerm intersection_order(std::span<const DualLine> lines, const Rat& x);

// Labels sorted by descending slope: the intersection order on a vertical line
// far to the right. Throws OrdinateTie on equal slopes.
PathPerm slope_order(std::span<const DualLine> lines);

// Projective map (x, y) -> (1/(c - x), y/(c - x)) sending the vertical line
// x = c to infinity. A line's image has slope equal to its ordinate at c.
// Intersection orders on vertical lines left of c are preserved; on vertical
// lines right of c they are reversed.
class ProjectiveMap {
 public:
  explicit ProjectiveMap(Rat c) : c_(std::move(c)) {}

  [[nodiscard]] const Rat& c() const { return c_; }
  [[nodiscard]] DualLine apply(const DualLine& l) const;
  [[nodiscard]] DualLine invert(const DualLine& l) const;
  // Image of the vertical line x = d. Throws DegenerateMap when d == c.
  [[nodiscard]] Rat apply_vertical(const Rat& d) const;
  [[nodiscard]] Rat invert_vertical(const Rat& x) const;

 private:
  Rat c_;
};

std::pair<std::vector<DualLine>, std::vector<Rat>> send_to_infinity(std::span<const DualLine> lines,
                                                                    const ProjectiveMap& map,
                                                                    std::span<const Rat> probes);

}  // namespace monoseq
