#include "monoseq/digraphs.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <stdexcept>
#include <string>

namespace monoseq {

Digraph::Digraph(int n, std::vector<std::pair<int, int>> edges)
    : n_(n), edges_(std::move(edges)), out_(static_cast<std::size_t>(std::max(n, 0)) + 1) {
  if (n < 1) throw std::invalid_argument("digraph needs at least one vertex");
  for (const auto& [u, v] : edges_) {
    if (u < 1 || v < 1 || u > n || v > n) {
      throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) + ") is out of range");
    }
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (const auto& [u, v] : edges_) out_[static_cast<std::size_t>(u)].push_back(v);
}

bool Digraph::has_edge(int u, int v) const { return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v)); }

bool is_topological(const Digraph& g, const TopOrder& t) {
  if (static_cast<int>(t.order.size()) != g.n()) return false;
  std::vector<int> pos(static_cast<std::size_t>(g.n()) + 1, -1);
  for (std::size_t p = 0; p < t.order.size(); ++p) {
    const int v = t.order[p];
    if (v < 1 || v > g.n() || pos[static_cast<std::size_t>(v)] != -1) return false;
    pos[static_cast<std::size_t>(v)] = static_cast<int>(p);
  }
  return std::all_of(g.edges().begin(), g.edges().end(), [&](const auto& e) {
    return pos[static_cast<std::size_t>(e.first)] < pos[static_cast<std::size_t>(e.second)];
  });
}

namespace {

Cyclic find_cycle(const Digraph& g, const std::vector<int>& indeg) {
  // Every vertex left with positive in-degree has a predecessor among the
  // leftovers; walking predecessors must revisit a vertex.
  std::vector<int> pred(static_cast<std::size_t>(g.n()) + 1, 0);
  int start = 0;
  for (const auto& [u, v] : g.edges()) {
    if (indeg[static_cast<std::size_t>(u)] > 0 && indeg[static_cast<std::size_t>(v)] > 0) {
      pred[static_cast<std::size_t>(v)] = u;
      if (start == 0) start = v;
    }
  }
  std::vector<int> seen_at(static_cast<std::size_t>(g.n()) + 1, -1);
  std::vector<int> walk;
  int v = start;
  while (seen_at[static_cast<std::size_t>(v)] < 0) {
    seen_at[static_cast<std::size_t>(v)] = static_cast<int>(walk.size());
    walk.push_back(v);
    v = pred[static_cast<std::size_t>(v)];
  }
  std::vector<int> cycle(walk.begin() + seen_at[static_cast<std::size_t>(v)], walk.end());
  std::reverse(cycle.begin(), cycle.end());
  return Cyclic{std::move(cycle)};
}

}  // namespace

std::variant<TopOrder, Cyclic> topological_order(const Digraph& g, TieBreak policy) {
  std::vector<int> indeg(static_cast<std::size_t>(g.n()) + 1, 0);
  for (const auto& e : g.edges()) ++indeg[static_cast<std::size_t>(e.second)];
  std::function<bool(int, int)> after = [policy](int a, int b) {
    return policy == TieBreak::SmallestFirst ? a > b : a < b;
  };
  std::priority_queue<int, std::vector<int>, std::function<bool(int, int)>> ready(after);
  for (int v = 1; v <= g.n(); ++v) {
    if (indeg[static_cast<std::size_t>(v)] == 0) ready.push(v);
  }
  TopOrder t;
  while (!ready.empty()) {
    const int u = ready.top();
    ready.pop();
    t.order.push_back(u);
    for (int v : g.successors(u)) {
      if (--indeg[static_cast<std::size_t>(v)] == 0) ready.push(v);
    }
  }
  if (static_cast<int>(t.order.size()) != g.n()) return find_cycle(g, indeg);
  return t;
}

bool is_order_unique(const Digraph& g, const TopOrder& t) {
  if (!is_topological(g, t)) throw std::invalid_argument("order is not topological for the digraph");
  for (std::size_t p = 0; p + 1 < t.order.size(); ++p) {
    if (!g.has_edge(t.order[p], t.order[p + 1])) return false;
  }
  return true;
}

PathPerm implied_path(const TopOrder& t) { return PathPerm(t.order); }

DigraphResult solve_digraphs(std::span<const Digraph> gs, std::span<const TopOrder> ts,
                             const std::variant<std::vector<Direction>, FreeThree>& dirs) {
  if (gs.empty() || gs.size() != ts.size()) throw std::invalid_argument("one topological order per digraph expected");
  std::vector<PathPerm> paths;
  for (std::size_t i = 0; i < gs.size(); ++i) {
    if (gs[i].n() != gs.front().n()) throw std::invalid_argument("digraphs must share the vertex set");
    if (!is_topological(gs[i], ts[i])) {
      throw std::invalid_argument("order " + std::to_string(i + 1) + " is not topological for digraph " +
                                  std::to_string(i + 1));
    }
    paths.push_back(implied_path(ts[i]));
  }
  const PathSet ps(std::move(paths));
  EmbedResult res = std::holds_alternative<FreeThree>(dirs) ? solve_three_free(ps)
                                                            : solve_fixed(ps, std::get<std::vector<Direction>>(dirs));
  if (auto* no = std::get_if<NoEmbedding>(&res)) return std::move(*no);
  return DigraphEmbedding{std::move(std::get<Embedding>(res)),
                          "vertex placement only: existence of an including planar st-digraph preserving each "
                          "order was not checked"};
}

}  // namespace monoseq
