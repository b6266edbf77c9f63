#include "monoseq/generators.hpp"

#include "monoseq/embedder.hpp"
#include "monoseq/errors.hpp"
#include "monoseq/sequences.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace monoseq {

PathSet gen_expo(int m) {
  if (m < 1) throw std::invalid_argument("gen_expo needs m >= 1");
  const int n = 3 * m + 2;
  std::vector<int> p2{1};
  for (int v = 3; v <= n; v += 3) p2.push_back(v);
  p2.push_back(2);
  for (int v = 4; v <= n; ++v) {
    if (v % 3 != 0) p2.push_back(v);
  }
  std::vector<int> p3;
  for (int v = n; v >= 3; --v) {
    if (v % 3 != 1) p3.push_back(v);
  }
  p3.push_back(2);
  for (int v = n; v >= 4; --v) {
    if (v % 3 == 1) p3.push_back(v);
  }
  p3.push_back(1);
  return PathSet({PathPerm::identity(n), PathPerm(std::move(p2)), PathPerm(std::move(p3))});
}

Rat expo_lower_bound(int m) {
  if (m < 1) throw std::invalid_argument("expo_lower_bound needs m >= 1");
  return pow2(static_cast<unsigned>(m)) * Rat(2L * m + 3) + Rat(2L * m - 1);
}

ExpoSpreadLp expo_spread_lp(int m) {
  const PathSet ps = gen_expo(m);
  const VerticalLineConfig cfg({Rat(0), Rat(1)});
  const std::vector<PathPerm> seq{ps[1], ps[2]};
  ExpoSpreadLp out{build_embedding_lp(seq, cfg), {}, EmbeddingLayout{2, ps.n()}};
  const auto& L = out.layout;
  const auto slope = [&](int v) {
    LinearExpr e;
    e.add(L.y(1, v), Rat(1)).add(L.y(0, v), Rat(-1));
    return e;
  };
  for (int v = 1; v < L.n; ++v) {
    LinearExpr e = slope(v + 1);
    for (const auto& [var, c] : slope(v).terms) e.add(var, -c);
    out.problem.add_row(std::move(e), Relation::GreaterEqual, Rat(1));
  }
  out.problem.add_row(slope(1), Relation::Equal, Rat(0));
  out.objective = slope(L.n);
  return out;
}

PathSet gen_nonrealizable_triple() {
  // Output of search_nonrealizable_triple(9, 1, 200000); see tools/derive.
  return PathSet({PathPerm({1, 5, 2, 6, 4, 3, 7, 9, 8}), PathPerm({7, 6, 5, 2, 9, 8, 4, 1, 3}),
                  PathPerm({9, 7, 6, 5, 8, 4, 2, 3, 1})});
}

namespace {

// Fenwick tree over 0/1 flags with selection of the k-th set flag.
class OpenPositions {
 public:
  explicit OpenPositions(std::size_t m) : tree_(m + 1, 0), flag_(m, false) {
    for (std::size_t p = 0; p < m; ++p) set(p, true);
  }

  [[nodiscard]] int count() const { return total_; }

  void set(std::size_t p, bool on) {
    if (flag_[p] == on) return;
    flag_[p] = on;
    const int d = on ? 1 : -1;
    total_ += d;
    for (std::size_t i = p + 1; i < tree_.size(); i += i & (~i + 1)) tree_[i] += d;
  }

  // Position of the k-th (0-based) set flag, in increasing position order.
  [[nodiscard]] std::size_t select(int k) const {
    std::size_t pos = 0;
    std::size_t step = 1;
    while (step * 2 < tree_.size()) step *= 2;
    for (; step > 0; step /= 2) {
      if (pos + step < tree_.size() && tree_[pos + step] <= k) {
        pos += step;
        k -= tree_[pos];
      }
    }
    return pos;
  }

 private:
  std::vector<int> tree_;
  std::vector<bool> flag_;
  int total_ = 0;
};

// Random reduced word for the reversal of 1..n: at each step a uniformly chosen
// adjacent ascent is swapped. Returns the swapped positions.
std::vector<std::size_t> random_sweep_positions(int n, std::mt19937_64& rng) {
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 1);
  OpenPositions open(order.size() - 1);
  std::vector<std::size_t> out;
  out.reserve(order.size() * (order.size() - 1) / 2);
  const auto refresh = [&](std::size_t p) { open.set(p, order[p] < order[p + 1]); };
  while (open.count() > 0) {
    const std::size_t p = open.select(std::uniform_int_distribution<int>(0, open.count() - 1)(rng));
    std::swap(order[p], order[p + 1]);
    out.push_back(p);
    refresh(p);
    if (p > 0) refresh(p - 1);
    if (p + 2 < order.size()) refresh(p + 1);
  }
  return out;
}

std::vector<std::vector<int>> random_sweep(int n, std::mt19937_64& rng) {
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 1);
  std::vector<std::vector<int>> snaps{order};
  for (std::size_t p : random_sweep_positions(n, rng)) {
    std::swap(order[p], order[p + 1]);
    snaps.push_back(order);
  }
  return snaps;
}

}  // namespace

std::optional<PathSet> search_nonrealizable_triple(int n, std::uint64_t seed, int budget) {
  if (n < 3) throw std::invalid_argument("search_nonrealizable_triple needs n >= 3");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < budget; ++attempt) {
    const auto snaps = random_sweep(n, rng);
    std::uniform_int_distribution<std::size_t> pick(0, snaps.size() - 1);
    std::set<std::size_t> chosen;
    while (chosen.size() < 3) chosen.insert(pick(rng));
    std::vector<PathPerm> paths;
    for (std::size_t s : chosen) paths.emplace_back(snaps[s]);
    const PathSet ps(std::move(paths));
    const auto res = solve_three_free(ps);
    if (const auto* no = std::get_if<NoEmbedding>(&res); no && no->reason == NoReason::LpInfeasible) return ps;
  }
  return std::nullopt;
}

namespace {

std::optional<std::vector<PathPerm>> projection_orders(const PointSet& pts, const std::vector<Rat>& xs) {
  std::vector<PathPerm> out;
  try {
    for (const auto& x : xs) out.push_back(projection_order(pts, vertical_to_direction(x)));
  } catch (const ProjectionTie&) {
    return std::nullopt;
  }
  return out;
}

}  // namespace

std::optional<GapSensitive> find_gap_sensitive(std::uint64_t seed, int budget) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coord(-20, 20);
  std::uniform_int_distribution<int> size(5, 8);
  std::uniform_int_distribution<long> line(-10, 10);
  const std::vector<Rat> shrink{Rat(1, 2), Rat(3, 4), Rat(9, 10), Rat(99, 100), Rat(999, 1000)};
  for (int attempt = 0; attempt < budget; ++attempt) {
    const int n = size(rng);
    std::vector<Point2> pts;
    while (static_cast<int>(pts.size()) < n) {
      Point2 p{Rat(coord(rng)), Rat(coord(rng))};
      if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(std::move(p));
    }
    std::set<long> xset;
    while (xset.size() < 4) xset.insert(line(rng));
    std::vector<Rat> xs;
    for (long x : xset) xs.emplace_back(x);
    const PointSet ps(std::move(pts));
    auto orders = projection_orders(ps, xs);
    if (!orders) continue;
    std::set<PathPerm> distinct(orders->begin(), orders->end());
    if (distinct.size() != orders->size()) continue;
    const Rat mid = (xs[1] + xs[2]) / Rat(2);
    for (const auto& s : shrink) {
      std::vector<Rat> moved{xs[0], xs[1] + s * (mid - xs[1]), xs[2] - s * (xs[2] - mid), xs[3]};
      const VerticalLineConfig cfg_b(moved);
      if (std::holds_alternative<FarkasCertificate>(feasible(build_embedding_lp(*orders, cfg_b)))) {
        return GapSensitive{PathSet(std::move(*orders)), VerticalLineConfig(xs), cfg_b};
      }
    }
  }
  return std::nullopt;
}

GapSensitive gap_sensitive_fixture() {
  // Output of find_gap_sensitive(7, 20000); see tools/derive.
  return GapSensitive{PathSet({PathPerm({2, 4, 6, 1, 5, 7, 3}), PathPerm({2, 4, 6, 1, 7, 5, 3}),
                               PathPerm({1, 7, 3, 6, 5, 4, 2}), PathPerm({7, 1, 3, 6, 5, 4, 2})}),
                      VerticalLineConfig({Rat(-3), Rat(-1), Rat(4), Rat(6)}),
                      VerticalLineConfig({Rat(-3), Rat(7, 8), Rat(17, 8), Rat(6)})};
}

std::vector<int> WiringDiagram::start() const {
  if (!initial.empty()) return initial;
  std::vector<int> order(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(order.begin(), order.end(), 1);
  return order;
}

namespace {

// Replays the sweep, calling visit(t, order_before_crossing_t, position_of_upper_line).
template <typename Visit>
void replay(const WiringDiagram& w, Visit visit) {
  if (w.n < 2) throw InvalidWiring("wiring diagram needs at least 2 lines");
  std::vector<int> order = w.start();
  if (static_cast<int>(order.size()) != w.n) throw InvalidWiring("initial order has the wrong length");
  std::vector<int> pos(static_cast<std::size_t>(w.n) + 1, -1);
  for (std::size_t p = 0; p < order.size(); ++p) {
    const int v = order[p];
    if (v < 1 || v > w.n || pos[static_cast<std::size_t>(v)] != -1) {
      throw InvalidWiring("initial order is not a permutation of 1.." + std::to_string(w.n));
    }
    pos[static_cast<std::size_t>(v)] = static_cast<int>(p);
  }
  std::set<std::pair<int, int>> seen;
  for (std::size_t t = 0; t < w.crossings.size(); ++t) {
    const auto [a, b] = w.crossings[t];
    const std::string where = "crossing " + std::to_string(t + 1) + " (" + std::to_string(a) + "," + std::to_string(b) + ")";
    if (a < 1 || b < 1 || a > w.n || b > w.n || a == b) throw InvalidWiring(where + " has invalid labels");
    if (!seen.insert(std::minmax(a, b)).second) throw InvalidWiring(where + " repeats a pair");
    const int pa = pos[static_cast<std::size_t>(a)];
    const int pb = pos[static_cast<std::size_t>(b)];
    if (std::abs(pa - pb) != 1) throw InvalidWiring(where + " swaps lines that are not adjacent");
    const int upper = std::min(pa, pb);
    visit(t, order, upper);
    std::swap(order[static_cast<std::size_t>(pa)], order[static_cast<std::size_t>(pb)]);
    std::swap(pos[static_cast<std::size_t>(a)], pos[static_cast<std::size_t>(b)]);
  }
  if (seen.size() != static_cast<std::size_t>(w.n) * static_cast<std::size_t>(w.n - 1) / 2) {
    throw InvalidWiring("not every pair of lines crosses");
  }
}

}  // namespace

void validate_wiring(const WiringDiagram& w) {
  replay(w, [](std::size_t, const std::vector<int>&, int) {});
}

std::vector<std::vector<int>> lines_above(const WiringDiagram& w) {
  std::vector<std::vector<int>> out;
  replay(w, [&](std::size_t, const std::vector<int>& order, int upper) {
    out.emplace_back(order.begin(), order.begin() + upper);
  });
  return out;
}

GmseInstance reduce_stretchability(const WiringDiagram& w) {
  GmseInstance g{w.n, {w.start()}};
  const std::vector<int>& first = g.paths.front();
  std::vector<int> rank(static_cast<std::size_t>(w.n) + 1);
  for (std::size_t p = 0; p < first.size(); ++p) rank[static_cast<std::size_t>(first[p])] = static_cast<int>(p);
  std::vector<std::vector<int>> emitted;
  replay(w, [&](std::size_t t, const std::vector<int>& order, int upper) {
    auto [i, j] = w.crossings[t];
    if (rank[static_cast<std::size_t>(i)] > rank[static_cast<std::size_t>(j)]) std::swap(i, j);
    for (std::size_t p = 0; p < order.size(); ++p) {
      const int l = order[p];
      if (l == i || l == j) continue;
      if (static_cast<int>(p) < upper) {
        emitted.push_back({l, j, i});
      } else {
        emitted.push_back({j, i, l});
      }
    }
  });
  g.paths.insert(g.paths.end(), emitted.begin(), emitted.end());
  return g;
}

namespace {

void check_relabeling(const std::vector<int>& sigma, int n) {
  std::vector<int> sorted = sigma;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> ident(static_cast<std::size_t>(n));
  std::iota(ident.begin(), ident.end(), 1);
  if (sorted != ident) throw std::invalid_argument("relabeling is not a permutation of 1..n");
}

int apply(const std::vector<int>& sigma, int v) { return sigma[static_cast<std::size_t>(v - 1)]; }

}  // namespace

WiringDiagram relabel(const WiringDiagram& w, const std::vector<int>& sigma) {
  check_relabeling(sigma, w.n);
  WiringDiagram out{w.n, {}, {}};
  for (int v : w.start()) out.initial.push_back(apply(sigma, v));
  for (const auto& [a, b] : w.crossings) out.crossings.emplace_back(apply(sigma, a), apply(sigma, b));
  return out;
}

GmseInstance relabel(const GmseInstance& g, const std::vector<int>& sigma) {
  check_relabeling(sigma, g.n);
  GmseInstance out{g.n, g.paths};
  for (auto& path : out.paths) {
    for (int& v : path) v = apply(sigma, v);
  }
  return out;
}

WiringDiagram random_wiring(int n, std::mt19937_64& rng) {
  if (n < 2) throw std::invalid_argument("random_wiring needs n >= 2");
  WiringDiagram w{n, {}, {}};
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 1);
  for (std::size_t p : random_sweep_positions(n, rng)) {
    w.crossings.emplace_back(order[p], order[p + 1]);
    std::swap(order[p], order[p + 1]);
  }
  return w;
}

PointSet random_general_position(int n, long range, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> coord(-range, range);
  for (;;) {
    std::vector<Point2> pts;
    while (static_cast<int>(pts.size()) < n) {
      Point2 p{Rat(coord(rng)), Rat(coord(rng))};
      if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(std::move(p));
    }
    PointSet ps(std::move(pts));
    try {
      (void)circular_sequence(ps);
      return ps;
    } catch (const DegeneratePosition&) {
    }
  }
}

}  // namespace monoseq
