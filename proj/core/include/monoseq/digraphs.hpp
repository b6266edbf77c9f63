#pragma once

#include "monoseq/embedder.hpp"
#include "monoseq/geometry.hpp"

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace monoseq {

// Directed graph on vertices 1..n without self-loops. Planarity and upward
// planarity are not checked.
class Digraph {
 public:
  // Throws std::invalid_argument on self-loops or labels outside 1..n.
  Digraph(int n, std::vector<std::pair<int, int>> edges);

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  [[nodiscard]] bool has_edge(int u, int v) const;
  [[nodiscard]] const std::vector<int>& successors(int u) const { return out_[static_cast<std::size_t>(u)]; }

 private:
  int n_;
  std::vector<std::pair<int, int>> edges_;  // sorted, deduplicated
  std::vector<std::vector<int>> out_;
};

struct TopOrder {
  std::vector<int> order;
};

// A directed cycle, first vertex not repeated.
struct Cyclic {
  std::vector<int> cycle;
};

// True iff order is a permutation of 1..n with every edge pointing forward.
bool is_topological(const Digraph& g, const TopOrder& t);

enum class TieBreak { SmallestFirst, LargestFirst };

// Kahn's algorithm taking the smallest (or largest) available source.
std::variant<TopOrder, Cyclic> topological_order(const Digraph& g, TieBreak policy = TieBreak::SmallestFirst);

// True iff consecutive vertices of t are joined by edges, i.e. t is the only
// topological order. Throws std::invalid_argument if t is not valid for g.
bool is_order_unique(const Digraph& g, const TopOrder& t);

PathPerm implied_path(const TopOrder& t);

struct FreeThree {};

struct DigraphEmbedding {
  Embedding embedding;
  // Always set: the including planar st-digraph condition is not checked.
  std::string caveat;
};

using DigraphResult = std::variant<DigraphEmbedding, NoEmbedding>;

// Implied paths handed to solve_fixed or, for FreeThree, solve_three_free.
// Throws std::invalid_argument when sizes disagree, an order is not
// topological, or FreeThree is requested with k != 3.
DigraphResult solve_digraphs(std::span<const Digraph> gs, std::span<const TopOrder> ts,
                             const std::variant<std::vector<Direction>, FreeThree>& dirs);

}  // namespace monoseq
