#pragma once

#include "monoseq/duality.hpp"
#include "monoseq/geometry.hpp"

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace monoseq {

// A path set in which every path places `anchor.first` before `anchor.second`.
struct AdjustedPathSet {
  PathSet base;                  // the input, untouched
  PathSet paths;                 // adjusted paths, same indexing as `base`
  std::pair<int, int> anchor;
  std::vector<bool> flipped;     // flipped[t]: paths[t] == base[t].reversed()
};

// Reverses the paths that place j before i. Throws std::invalid_argument for
// i == j or labels outside 1..n.
AdjustedPathSet adjust(const PathSet& ps, int i, int j);

// First pair (lexicographic) that keeps its relative order in every path, if any.
std::optional<std::pair<int, int>> common_anchor(std::span<const PathPerm> paths);

// True iff no pair of vertices changes its relative order twice along the
// sequence, i.e. there is no a < b < c with the pair ordered one way in P_a and
// P_c and the other way in P_b.
bool is_allowable_sequence(std::span<const PathPerm> seq);

// An ordering of (some of) the paths of a set. source[t] is the index in the
// originating set of the path placed at position t.
struct PathSequence {
  std::vector<PathPerm> paths;
  std::vector<int> source;
};

// The allowable ordering of an adjusted set, built by recursive pivot-pair
// partitioning; unique up to reversal once equal paths are coalesced. Equal
// paths end up adjacent, in input order. nullopt when no ordering is allowable.
std::optional<PathSequence> allowable_order(const AdjustedPathSet& aps);
std::optional<PathSequence> allowable_order(std::span<const PathPerm> paths);

struct Swap {
  int a;  // a < b, vertex labels
  int b;
  Direction supporting;  // p_b - p_a
  Direction projection;  // direction of the projection line at the swap, upper half-plane
};

// Half-period of the circular sequence of a point set, starting at the
// projection onto the positive x-axis and rotating counterclockwise.
struct CircularSequence {
  PathPerm initial;
  std::vector<Swap> swaps;
  std::vector<PathPerm> snapshots;  // initial plus one per swap
};

// Throws DegeneratePosition for collinear triples, parallel supporting lines or
// vertical supporting lines, unless `perturb` is set, in which case ties are
// resolved as a symbolic perturbation: equal x is broken by y, and
// simultaneous swaps are applied smallest adjacent pair first.
CircularSequence circular_sequence(const PointSet& pts, bool perturb = false);

// True iff p or its reverse is one of the snapshots.
bool contains_permutation(const CircularSequence& cs, const PathPerm& p);

}  // namespace monoseq
