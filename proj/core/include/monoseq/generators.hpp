#pragma once

#include "monoseq/duality.hpp"
#include "monoseq/embedding_lp.hpp"
#include "monoseq/geometry.hpp"
#include "monoseq/lp.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

namespace monoseq {

// Three paths on n = 3m + 2 vertices whose every embedding has a slope spread
// exponential in m. Throws std::invalid_argument for m < 1.
PathSet gen_expo(int m);

// 2^m (2m + 3) + 2m - 1.
Rat expo_lower_bound(int m);

// LP over the second and third paths of gen_expo(m) on vertical lines x = 0, 1,
// plus unit gaps between consecutive slopes in label order and slope(1) = 0.
// The objective is the slope of vertex n.
struct ExpoSpreadLp {
  LpProblem problem;
  LinearExpr objective;
  EmbeddingLayout layout;
};
ExpoSpreadLp expo_spread_lp(int m);

// Frozen allowable triple on 9 vertices whose embedding LP is infeasible.
PathSet gen_nonrealizable_triple();

// Seeded search over three snapshots of random pseudoline sweeps on n lines;
// returns the first allowable triple that solve_three_free rejects.
std::optional<PathSet> search_nonrealizable_triple(int n, std::uint64_t seed, int budget);

struct GapSensitive {
  PathSet paths;  // k = 4, in the order of the vertical lines
  VerticalLineConfig feasible_cfg;
  VerticalLineConfig infeasible_cfg;  // same x_1, x_4; middle lines moved toward each other
};

// Samples integer point sets, reads off four projection orders and moves the
// two middle vertical lines toward their midpoint until the LP fails. Only
// instances with four distinct orders are kept.
std::optional<GapSensitive> find_gap_sensitive(std::uint64_t seed, int budget);

// Frozen witness found by find_gap_sensitive(7, ...).
GapSensitive gap_sensitive_fixture();

// x-monotone pseudoline arrangement as a sweep of adjacent transpositions.
// Orders are read top to bottom.
struct WiringDiagram {
  int n = 0;
  std::vector<std::pair<int, int>> crossings;
  std::vector<int> initial;  // left-end order; empty means 1..n

  [[nodiscard]] std::vector<int> start() const;
};

// Throws InvalidWiring unless each crossing swaps two currently adjacent lines,
// every pair crosses exactly once and labels are 1..n.
void validate_wiring(const WiringDiagram& w);

// Labels strictly above crossing t, top first.
std::vector<std::vector<int>> lines_above(const WiringDiagram& w);

struct GmseInstance {
  int n = 0;
  std::vector<std::vector<int>> paths;  // partial paths in required radial order

  friend bool operator==(const GmseInstance&, const GmseInstance&) = default;
};

// First path: the left-end order. Then per crossing of i and j (i before j in
// the first path), one path per other line l: <l, j, i> when l is above the
// crossing, <j, i, l> when below.
GmseInstance reduce_stretchability(const WiringDiagram& w);

// sigma[v - 1] is the new label of v.
WiringDiagram relabel(const WiringDiagram& w, const std::vector<int>& sigma);
GmseInstance relabel(const GmseInstance& g, const std::vector<int>& sigma);

// Random sweep of the n lines from 1..n (top to bottom) to its reverse.
WiringDiagram random_wiring(int n, std::mt19937_64& rng);

// n points with integer coordinates in [-range, range] and no three collinear,
// no two supporting lines parallel and no two points sharing an x-coordinate.
PointSet random_general_position(int n, long range, std::mt19937_64& rng);

}  // namespace monoseq
