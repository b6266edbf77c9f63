#include "monoseq/errors.hpp"

#include <sstream>

namespace monoseq {

namespace {

std::string describe(const std::vector<DegeneratePosition::Triple>& collinear,
                     const std::vector<DegeneratePosition::PairOfPairs>& parallel,
                     const std::vector<std::pair<int, int>>& vertical) {
  std::ostringstream os;
  os << "degenerate point set:";
  for (const auto& t : collinear) os << " collinear(" << t[0] << "," << t[1] << "," << t[2] << ")";
  for (const auto& [p, q] : parallel) {
    os << " parallel(" << p.first << "-" << p.second << " || " << q.first << "-" << q.second << ")";
  }
  for (const auto& [a, b] : vertical) os << " vertical(" << a << "-" << b << ")";
  return os.str();
}

}  // namespace

DegeneratePosition::DegeneratePosition(std::vector<Triple> collinear, std::vector<PairOfPairs> parallel,
                                       std::vector<std::pair<int, int>> vertical)
    : std::runtime_error(describe(collinear, parallel, vertical)),
      collinear_(std::move(collinear)),
      parallel_(std::move(parallel)),
      vertical_(std::move(vertical)) {}

ProjectionTie::ProjectionTie(int a, int b)
    : std::runtime_error("points " + std::to_string(a) + " and " + std::to_string(b) + " tie under projection"),
      a_(a),
      b_(b) {}

OrdinateTie::OrdinateTie(int a, int b)
    : std::runtime_error("lines " + std::to_string(a) + " and " + std::to_string(b) + " meet the vertical line at one ordinate"),
      a_(a),
      b_(b) {}

}  // namespace monoseq
