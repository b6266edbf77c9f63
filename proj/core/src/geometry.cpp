#include "monoseq/geometry.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <string>

namespace monoseq {

PathPerm::PathPerm(std::vector<int> order) : order_(std::move(order)) {
  const int n = static_cast<int>(order_.size());
  if (n < 2) throw std::invalid_argument("path needs at least 2 vertices");
  rank_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (int pos = 0; pos < n; ++pos) {
    const int v = order_[static_cast<std::size_t>(pos)];
    if (v < 1 || v > n) throw std::invalid_argument("vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
    auto& slot = rank_[static_cast<std::size_t>(v)];
    if (slot != 0) throw std::invalid_argument("vertex " + std::to_string(v) + " repeated in path");
    slot = pos + 1;
  }
}

PathPerm PathPerm::identity(int n) {
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i + 1;
  return PathPerm(std::move(order));
}

PathPerm PathPerm::reversed() const {
  std::vector<int> order(order_.rbegin(), order_.rend());
  return PathPerm(std::move(order));
}

std::ostream& operator<<(std::ostream& os, const PathPerm& p) {
  os << '<';
  for (int i = 0; i < p.size(); ++i) os << (i ? "," : "") << p.at(i);
  return os << '>';
}

PathSet::PathSet(std::vector<PathPerm> paths) : paths_(std::move(paths)) {
  if (paths_.empty()) throw std::invalid_argument("path set must contain at least one path");
  const int n = paths_.front().size();
  for (const auto& p : paths_) {
    if (p.size() != n) throw std::invalid_argument("paths in a set must share the vertex set 1..n");
  }
}

std::ostream& operator<<(std::ostream& os, const Point2& p) { return os << '(' << p.x << ", " << p.y << ')'; }

Direction::Direction(Rat dx, Rat dy) : dx_(std::move(dx)), dy_(std::move(dy)) {
  if (dx_.is_zero() && dy_.is_zero()) throw std::invalid_argument("direction must be non-zero");
}

std::optional<Rat> Direction::slope() const {
  if (is_vertical()) return std::nullopt;
  return dy_ / dx_;
}

bool Direction::parallel_to(const Direction& other) const {
  return cross(dx_, dy_, other.dx_, other.dy_).is_zero();
}

bool Direction::same_orientation(const Direction& other) const {
  return parallel_to(other) && (dx_ * other.dx_ + dy_ * other.dy_).sign() > 0;
}

std::ostream& operator<<(std::ostream& os, const Direction& d) { return os << '[' << d.dx() << ", " << d.dy() << ']'; }

DualLine point_to_dual(const Point2& p) { return DualLine{p.x, -p.y}; }

Point2 dual_to_point(const DualLine& l) { return Point2{l.slope, -l.intercept}; }

Rat dot(const Point2& p, const Direction& v) { return p.x * v.dx() + p.y * v.dy(); }

Rat cross(const Rat& ax, const Rat& ay, const Rat& bx, const Rat& by) { return ax * by - ay * bx; }

}  // namespace monoseq
