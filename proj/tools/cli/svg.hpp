#pragma once

#include "monoseq/duality.hpp"
#include "monoseq/geometry.hpp"

#include <string>
#include <vector>

namespace monoseq::cli {

// Straight-line drawing of every path through the points, one colour per path,
// with the direction of each path drawn as an arrow in the corner.
std::string render_primal(const PointSet& pts, const std::vector<Direction>& dirs, const PathSet& paths,
                          int precision = 12);

// Dual arrangement: the line of every point, plus the vertical line of every
// non-horizontal direction.
std::string render_dual(const PointSet& pts, const std::vector<Direction>& dirs, int precision = 12);

}  // namespace monoseq::cli
