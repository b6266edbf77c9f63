#pragma once

#include "monoseq/rational.hpp"

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

namespace monoseq {

// A directed spanning path on vertices 1..n, stored as the visiting order.
class PathPerm {
 public:
  // Throws std::invalid_argument unless `order` is a permutation of 1..n, n >= 2.
  explicit PathPerm(std::vector<int> order);

  static PathPerm identity(int n);

  [[nodiscard]] int size() const { return static_cast<int>(order_.size()); }
  [[nodiscard]] std::span<const int> order() const { return order_; }
  [[nodiscard]] int at(int position) const { return order_[static_cast<std::size_t>(position)]; }

  // 1-based rank of vertex v along the path.
  [[nodiscard]] int rank(int vertex) const { return rank_[static_cast<std::size_t>(vertex)]; }
  [[nodiscard]] bool precedes(int a, int b) const { return rank(a) < rank(b); }

  [[nodiscard]] PathPerm reversed() const;

  friend bool operator==(const PathPerm& a, const PathPerm& b) { return a.order_ == b.order_; }
  friend auto operator<=>(const PathPerm& a, const PathPerm& b) { return a.order_ <=> b.order_; }

 private:
  std::vector<int> order_;
  std::vector<int> rank_;  // indexed by vertex label, slot 0 unused
};

std::ostream& operator<<(std::ostream& os, const PathPerm& p);

// A set of k >= 1 spanning paths on the common vertex set 1..n.
class PathSet {
 public:
  explicit PathSet(std::vector<PathPerm> paths);

  [[nodiscard]] int n() const { return paths_.front().size(); }
  [[nodiscard]] int k() const { return static_cast<int>(paths_.size()); }
  [[nodiscard]] const std::vector<PathPerm>& paths() const { return paths_; }
  [[nodiscard]] const PathPerm& operator[](std::size_t i) const { return paths_[i]; }

  friend bool operator==(const PathSet&, const PathSet&) = default;

 private:
  std::vector<PathPerm> paths_;
};

struct Point2 {
  Rat x;
  Rat y;

  friend bool operator==(const Point2&, const Point2&) = default;
};

std::ostream& operator<<(std::ostream& os, const Point2& p);

// A direction of monotonicity. Orientation matters: v and -v are different.
class Direction {
 public:
  Direction(Rat dx, Rat dy);

  [[nodiscard]] const Rat& dx() const { return dx_; }
  [[nodiscard]] const Rat& dy() const { return dy_; }
  [[nodiscard]] bool is_vertical() const { return dx_.is_zero(); }
  [[nodiscard]] bool is_horizontal() const { return dy_.is_zero(); }
  [[nodiscard]] std::optional<Rat> slope() const;
  [[nodiscard]] Direction negated() const { return {-dx_, -dy_}; }

  // Same line through the origin, either orientation.
  [[nodiscard]] bool parallel_to(const Direction& other) const;
  [[nodiscard]] bool same_orientation(const Direction& other) const;

  friend bool operator==(const Direction&, const Direction&) = default;

 private:
  Rat dx_;
  Rat dy_;
};

std::ostream& operator<<(std::ostream& os, const Direction& d);

// Non-vertical line y = slope * x + intercept.
struct DualLine {
  Rat slope;
  Rat intercept;

  [[nodiscard]] Rat at(const Rat& x) const { return slope * x + intercept; }

  friend bool operator==(const DualLine&, const DualLine&) = default;
};

// Point (a, b) <-> line y = a x - b.
DualLine point_to_dual(const Point2& p);
Point2 dual_to_point(const DualLine& l);

Rat dot(const Point2& p, const Direction& v);
Rat cross(const Rat& ax, const Rat& ay, const Rat& bx, const Rat& by);

}  // namespace monoseq
