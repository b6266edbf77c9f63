#include "monoseq/sequences.hpp"

#include "monoseq/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>

namespace monoseq {

AdjustedPathSet adjust(const PathSet& ps, int i, int j) {
  const int n = ps.n();
  if (i == j || i < 1 || j < 1 || i > n || j > n) {
    throw std::invalid_argument("invalid anchor pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
  }
  std::vector<PathPerm> out;
  std::vector<bool> flipped;
  out.reserve(ps.paths().size());
  for (const auto& p : ps.paths()) {
    const bool flip = !p.precedes(i, j);
    out.push_back(flip ? p.reversed() : p);
    flipped.push_back(flip);
  }
  return AdjustedPathSet{ps, PathSet(std::move(out)), {i, j}, std::move(flipped)};
}

std::optional<std::pair<int, int>> common_anchor(std::span<const PathPerm> paths) {
  if (paths.empty()) return std::nullopt;
  const int n = paths.front().size();
  for (int a = 1; a <= n; ++a) {
    for (int b = 1; b <= n; ++b) {
      if (a == b) continue;
      const bool all = std::all_of(paths.begin(), paths.end(), [&](const PathPerm& p) { return p.precedes(a, b); });
      if (all) return std::make_pair(a, b);
    }
  }
  return std::nullopt;
}

bool is_allowable_sequence(std::span<const PathPerm> seq) {
  if (seq.size() < 3) return true;
  const int n = seq.front().size();
  for (const auto& p : seq) {
    if (p.size() != n) throw std::invalid_argument("sequence mixes paths of different lengths");
  }
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      int changes = 0;
      bool prev = seq.front().precedes(a, b);
      for (std::size_t t = 1; t < seq.size(); ++t) {
        const bool cur = seq[t].precedes(a, b);
        if (cur != prev && ++changes > 1) return false;
        prev = cur;
      }
    }
  }
  return true;
}

namespace {

// Recursive pivot-pair partition over distinct paths. Each call orders one
// contiguous block; `left`/`right` are any member of the neighbouring blocks.
class PivotOrderer {
 public:
  explicit PivotOrderer(const std::vector<PathPerm>& distinct) : paths_(distinct), n_(distinct.front().size()) {}

  void build(const std::vector<int>& block, std::optional<int> left, std::optional<int> right, std::vector<int>& out) const {
    if (block.size() == 1) {
      out.push_back(block.front());
      return;
    }
    const auto [a, b] = first_split(block);
    std::vector<int> forward;
    std::vector<int> backward;
    for (int c : block) (paths_[static_cast<std::size_t>(c)].precedes(a, b) ? forward : backward).push_back(c);

    bool forward_first = true;
    if (left) {
      forward_first = paths_[static_cast<std::size_t>(*left)].precedes(a, b);
    } else if (right) {
      forward_first = !paths_[static_cast<std::size_t>(*right)].precedes(a, b);
    }
    const auto& first = forward_first ? forward : backward;
    const auto& second = forward_first ? backward : forward;
    build(first, left, second.front(), out);
    build(second, first.front(), right, out);
  }

 private:
  std::pair<int, int> first_split(const std::vector<int>& block) const {
    const auto& head = paths_[static_cast<std::size_t>(block.front())];
    for (int a = 1; a <= n_; ++a) {
      for (int b = a + 1; b <= n_; ++b) {
        const bool o = head.precedes(a, b);
        for (std::size_t t = 1; t < block.size(); ++t) {
          if (paths_[static_cast<std::size_t>(block[t])].precedes(a, b) != o) return {a, b};
        }
      }
    }
    throw std::logic_error("block of distinct paths has no splitting pair");
  }

  const std::vector<PathPerm>& paths_;
  int n_;
};

}  // namespace

std::optional<PathSequence> allowable_order(std::span<const PathPerm> paths) {
  if (paths.empty()) throw std::invalid_argument("allowable_order of an empty set");
  std::vector<PathPerm> distinct;
  std::vector<std::vector<int>> members;
  std::map<PathPerm, int> class_of;
  for (int t = 0; t < static_cast<int>(paths.size()); ++t) {
    const auto& p = paths[static_cast<std::size_t>(t)];
    auto [it, inserted] = class_of.try_emplace(p, static_cast<int>(distinct.size()));
    if (inserted) {
      distinct.push_back(p);
      members.emplace_back();
    }
    members[static_cast<std::size_t>(it->second)].push_back(t);
  }

  std::vector<int> class_order;
  if (distinct.size() == 1) {
    class_order.push_back(0);
  } else {
    std::vector<int> all(distinct.size());
    for (std::size_t c = 0; c < all.size(); ++c) all[c] = static_cast<int>(c);
    PivotOrderer(distinct).build(all, std::nullopt, std::nullopt, class_order);
    std::vector<PathPerm> seq;
    seq.reserve(class_order.size());
    for (int c : class_order) seq.push_back(distinct[static_cast<std::size_t>(c)]);
    if (!is_allowable_sequence(seq)) return std::nullopt;
  }

  PathSequence out;
  for (int c : class_order) {
    for (int t : members[static_cast<std::size_t>(c)]) {
      out.paths.push_back(paths[static_cast<std::size_t>(t)]);
      out.source.push_back(t);
    }
  }
  return out;
}

std::optional<PathSequence> allowable_order(const AdjustedPathSet& aps) { return allowable_order(aps.paths.paths()); }

namespace {

struct Event {
  int a;
  int b;
  Rat sx;  // supporting direction p_b - p_a
  Rat sy;
  Rat nx;  // normal, y >= 0; y == 0 only for vertical supporting lines (angle pi)
  Rat ny;
};

// Angular order of normals in (0, pi].
bool angle_less(const Event& e, const Event& f) {
  const bool e_pi = e.ny.is_zero();
  const bool f_pi = f.ny.is_zero();
  if (e_pi || f_pi) return !e_pi && f_pi;
  return cross(e.nx, e.ny, f.nx, f.ny).sign() > 0;
}

bool same_angle(const Event& e, const Event& f) { return !angle_less(e, f) && !angle_less(f, e); }

}  // namespace

CircularSequence circular_sequence(const PointSet& pts, bool perturb) {
  const int n = pts.size();
  std::vector<Event> events;
  events.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2);
  std::vector<std::pair<int, int>> vertical;
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      const Rat sx = pts.vertex(b).x - pts.vertex(a).x;
      const Rat sy = pts.vertex(b).y - pts.vertex(a).y;
      Event e{a, b, sx, sy, Rat(0), Rat(0)};
      if (sx.sign() > 0) {
        e.nx = -sy;
        e.ny = sx;
      } else if (sx.sign() < 0) {
        e.nx = sy;
        e.ny = -sx;
      } else {
        e.nx = -sy.abs();
        vertical.emplace_back(a, b);
      }
      events.push_back(std::move(e));
    }
  }
  std::stable_sort(events.begin(), events.end(), angle_less);

  if (!perturb) {
    std::set<std::vector<int>> collinear;
    std::vector<DegeneratePosition::PairOfPairs> parallel;
    for (std::size_t s = 0; s < events.size();) {
      std::size_t t = s + 1;
      while (t < events.size() && same_angle(events[s], events[t])) ++t;
      for (std::size_t u = s; u < t; ++u) {
        for (std::size_t w = u + 1; w < t; ++w) {
          const auto& e = events[u];
          const auto& f = events[w];
          std::set<int> verts{e.a, e.b, f.a, f.b};
          if (verts.size() == 3) {
            collinear.insert(std::vector<int>(verts.begin(), verts.end()));
          } else if (!e.ny.is_zero()) {
            parallel.push_back({{e.a, e.b}, {f.a, f.b}});
          }
        }
      }
      s = t;
    }
    if (!collinear.empty() || !parallel.empty() || !vertical.empty()) {
      throw DegeneratePosition(std::vector<std::vector<int>>(collinear.begin(), collinear.end()), std::move(parallel),
                               std::move(vertical));
    }
  }

  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i + 1;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const auto& p = pts.vertex(a);
    const auto& q = pts.vertex(b);
    return p.x < q.x || (p.x == q.x && p.y < q.y);
  });
  std::vector<int> pos(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;

  CircularSequence cs{PathPerm(order), {}, {}};
  cs.snapshots.push_back(cs.initial);
  const auto apply = [&](const Event& e) {
    const int pa = pos[static_cast<std::size_t>(e.a)];
    const int pb = pos[static_cast<std::size_t>(e.b)];
    std::swap(order[static_cast<std::size_t>(pa)], order[static_cast<std::size_t>(pb)]);
    std::swap(pos[static_cast<std::size_t>(e.a)], pos[static_cast<std::size_t>(e.b)]);
    cs.swaps.push_back(Swap{e.a, e.b, Direction(e.sx, e.sy), Direction(e.nx, e.ny)});
    cs.snapshots.emplace_back(order);
  };
  const auto adjacent = [&](const Event& e) {
    return std::abs(pos[static_cast<std::size_t>(e.a)] - pos[static_cast<std::size_t>(e.b)]) == 1;
  };

  for (std::size_t s = 0; s < events.size();) {
    std::size_t t = s + 1;
    while (t < events.size() && same_angle(events[s], events[t])) ++t;
    // Pending group, already in lexicographic (a, b) order from the stable sort.
    std::vector<const Event*> pending;
    for (std::size_t u = s; u < t; ++u) pending.push_back(&events[u]);
    std::sort(pending.begin(), pending.end(),
              [](const Event* e, const Event* f) { return std::tie(e->a, e->b) < std::tie(f->a, f->b); });
    while (!pending.empty()) {
      auto it = std::find_if(pending.begin(), pending.end(), [&](const Event* e) { return adjacent(*e); });
      if (it == pending.end()) throw std::logic_error("circular sequence: no adjacent swap available");
      apply(**it);
      pending.erase(it);
    }
    s = t;
  }
  return cs;
}

bool contains_permutation(const CircularSequence& cs, const PathPerm& p) {
  const PathPerm r = p.reversed();
  return std::any_of(cs.snapshots.begin(), cs.snapshots.end(), [&](const PathPerm& s) { return s == p || s == r; });
}

}  // namespace monoseq
