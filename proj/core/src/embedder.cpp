#include "monoseq/embedder.hpp"

#include "monoseq/embedding_lp.hpp"
#include "monoseq/errors.hpp"
#include "monoseq/sequences.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

namespace monoseq {

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::TwoPath: return "two-path";
    case Provenance::FixedDirections: return "fixed-directions";
    case Provenance::ThreeFree: return "three-free";
  }
  return "unknown";
}

std::string to_string(NoReason r) {
  switch (r) {
    case NoReason::NotAdjustable: return "NOT_ADJUSTABLE";
    case NoReason::NotAllowable: return "NOT_ALLOWABLE";
    case NoReason::RadialOrderMismatch: return "RADIAL_ORDER_MISMATCH";
    case NoReason::LpInfeasible: return "LP_INFEASIBLE";
  }
  return "UNKNOWN";
}

VerifyResult verify(const PointSet& points, std::span<const Direction> dirs, const PathSet& paths, bool allow_reverse) {
  if (static_cast<int>(dirs.size()) != paths.k()) throw std::invalid_argument("verify: one direction per path expected");
  if (points.size() != paths.n()) throw std::invalid_argument("verify: point count differs from path length");
  for (int i = 0; i < paths.k(); ++i) {
    const auto& want = paths[static_cast<std::size_t>(i)];
    try {
      const PathPerm got = projection_order(points, dirs[static_cast<std::size_t>(i)]);
      if (got == want || (allow_reverse && got == want.reversed())) continue;
      std::ostringstream os;
      os << "path " << i + 1 << ": expected " << want << ", projection gives " << got;
      return {false, os.str()};
    } catch (const ProjectionTie& tie) {
      std::ostringstream os;
      os << "path " << i + 1 << ": vertices " << tie.pair().first << " and " << tie.pair().second
         << " project to the same value";
      return {false, os.str()};
    }
  }
  return {};
}

Embedding embed_two_paths(const PathPerm& p1, const PathPerm& p2, const VerticalLineConfig& cfg) {
  if (cfg.k() != 2) throw std::invalid_argument("embed_two_paths needs exactly two vertical lines");
  if (p1.size() != p2.size()) throw std::invalid_argument("embed_two_paths: paths differ in length");
  const int n = p1.size();
  const Rat q = cfg.gap(0);
  std::vector<Point2> pts;
  pts.reserve(static_cast<std::size_t>(n));
  for (int v = 1; v <= n; ++v) {
    const Rat y1(-p1.rank(v));
    const Rat y2(-p2.rank(v));
    const Rat slope = (y2 - y1) / q;
    pts.push_back(dual_to_point(DualLine{slope, y1 - slope * cfg.x(0)}));
  }
  Embedding e{PointSet(std::move(pts)), {vertical_to_direction(cfg.x(0)), vertical_to_direction(cfg.x(1))},
              Provenance::TwoPath};
  const PathSet ps({p1, p2});
  if (auto check = verify(e.points, e.directions, ps, false); !check) {
    throw std::logic_error("two-path construction failed verification: " + check.diagnostic);
  }
  return e;
}

namespace {

// Direction map D = A_mu * B_lambda with B_lambda (dx, dy) = (dx, dy - lambda dx)
// and A_mu (dx, dy) = (dx - mu dy, dy). det D = 1. Points solved for the mapped
// directions are pulled back by p = D^T p', so <p, v> = <p', D v>.
struct Shear {
  Rat lambda;
  Rat mu;

  [[nodiscard]] Direction apply(const Direction& v) const {
    const Rat dy = v.dy() - lambda * v.dx();
    return {v.dx() - mu * dy, dy};
  }
  [[nodiscard]] Point2 pull_back(const Point2& p) const {
    return {(Rat(1) + mu * lambda) * p.x - lambda * p.y, p.y - mu * p.x};
  }
};

Shear choose_shear(std::span<const Direction> dirs) {
  for (long s = 0;; ++s) {
    for (long lambda = 0; lambda <= s; ++lambda) {
      const Shear sh{Rat(lambda), Rat(s - lambda)};
      const bool ok = std::all_of(dirs.begin(), dirs.end(), [&](const Direction& v) {
        const Direction w = sh.apply(v);
        return !w.is_vertical() && !w.is_horizontal();
      });
      if (ok) return sh;
    }
  }
}

NoEmbedding infeasible(LpProblem lp, FarkasCertificate cert) {
  return NoEmbedding{NoReason::LpInfeasible, "the embedding LP has no solution", std::move(lp), std::move(cert)};
}

std::vector<Point2> points_from_lp(const LpSolution& sol, const VerticalLineConfig& cfg, int n) {
  std::vector<Point2> pts;
  pts.reserve(static_cast<std::size_t>(n));
  for (const auto& l : recover_lines(sol, cfg, n)) pts.push_back(dual_to_point(l));
  return pts;
}

void check_or_throw(const Embedding& e, const PathSet& paths) {
  if (auto check = verify(e.points, e.directions, paths, false); !check) {
    throw std::logic_error("constructed embedding failed verification: " + check.diagnostic);
  }
}

}  // namespace

EmbedResult solve_fixed(const PathSet& paths, std::span<const Direction> dirs) {
  const int k = paths.k();
  const int n = paths.n();
  if (static_cast<int>(dirs.size()) != k) throw std::invalid_argument("solve_fixed: one direction per path expected");

  const Shear shear = choose_shear(dirs);
  std::map<Rat, std::pair<PathPerm, int>> by_line;
  for (int t = 0; t < k; ++t) {
    Direction w = shear.apply(dirs[static_cast<std::size_t>(t)]);
    PathPerm p = paths[static_cast<std::size_t>(t)];
    if (w.dy().sign() < 0) {
      w = w.negated();
      p = p.reversed();
    }
    const Rat x = -w.dx() / w.dy();
    auto [it, inserted] = by_line.try_emplace(x, p, t);
    if (!inserted && !(it->second.first == p)) {
      return NoEmbedding{NoReason::NotAdjustable,
                         "directions " + std::to_string(it->second.second + 1) + " and " + std::to_string(t + 1) +
                             " are parallel but their paths give different orders",
                         std::nullopt, std::nullopt};
    }
  }

  if (!allowable_order(adjust(paths, 1, 2))) {
    return NoEmbedding{NoReason::NotAllowable, "the adjusted path set has no allowable ordering", std::nullopt,
                       std::nullopt};
  }

  std::vector<Rat> xs;
  std::vector<PathPerm> seq;
  for (const auto& [x, entry] : by_line) {
    xs.push_back(x);
    seq.push_back(entry.first);
  }
  if (!is_allowable_sequence(seq)) {
    return NoEmbedding{NoReason::RadialOrderMismatch,
                       "the radial order of the directions does not induce an allowable sequence", std::nullopt,
                       std::nullopt};
  }

  std::vector<Point2> local;
  if (seq.size() == 1) {
    for (int v = 1; v <= n; ++v) local.push_back({Rat(0), Rat(seq.front().rank(v))});
  } else {
    const VerticalLineConfig cfg(std::move(xs));
    LpProblem lp = build_embedding_lp(seq, cfg);
    auto res = feasible(lp);
    if (auto* cert = std::get_if<FarkasCertificate>(&res)) return infeasible(std::move(lp), std::move(*cert));
    local = points_from_lp(std::get<LpSolution>(res), cfg, n);
  }

  std::vector<Point2> pts;
  pts.reserve(local.size());
  for (const auto& p : local) pts.push_back(shear.pull_back(p));
  Embedding e{PointSet(std::move(pts)), std::vector<Direction>(dirs.begin(), dirs.end()), Provenance::FixedDirections};
  check_or_throw(e, paths);
  return e;
}

EmbedResult solve_three_free(const PathSet& paths) {
  if (paths.k() != 3) throw std::invalid_argument("solve_three_free needs exactly three paths");
  const AdjustedPathSet aps = adjust(paths, 1, 2);
  const auto order = allowable_order(aps);
  if (!order) {
    return NoEmbedding{NoReason::NotAllowable, "the adjusted path set has no allowable ordering", std::nullopt,
                       std::nullopt};
  }
  const VerticalLineConfig cfg({Rat(0), Rat(1), Rat(2)});
  LpProblem lp = build_embedding_lp(order->paths, cfg);
  auto res = feasible(lp);
  if (auto* cert = std::get_if<FarkasCertificate>(&res)) return infeasible(std::move(lp), std::move(*cert));

  std::vector<Direction> dirs(3, Direction(Rat(0), Rat(1)));
  for (std::size_t t = 0; t < 3; ++t) {
    const auto s = static_cast<std::size_t>(order->source[t]);
    const Direction d = vertical_to_direction(cfg.x(static_cast<int>(t)));
    dirs[s] = aps.flipped[s] ? d.negated() : d;
  }
  Embedding e{PointSet(points_from_lp(std::get<LpSolution>(res), cfg, paths.n())), std::move(dirs),
              Provenance::ThreeFree};
  check_or_throw(e, paths);
  return e;
}

namespace {

Rat random_rat(std::mt19937_64& rng, long lo, long hi, long max_den) {
  std::uniform_int_distribution<long> num(lo * max_den, hi * max_den);
  std::uniform_int_distribution<long> den(1, max_den);
  return Rat(num(rng), den(rng));
}

}  // namespace

Theorem3Report theorem3_consistency(const PathSet& paths, int trials, std::uint64_t seed) {
  if (paths.k() != 3) throw std::invalid_argument("theorem3_consistency needs exactly three paths");
  Theorem3Report report;
  report.canonical_feasible = is_embedding(solve_three_free(paths));
  const AdjustedPathSet aps = adjust(paths, 1, 2);
  const auto order = allowable_order(aps);

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> entry(-3, 3);
  for (int trial = 0; trial < trials; ++trial) {
    std::vector<Direction> dirs;
    if (order) {
      std::vector<Rat> xs;
      while (xs.size() < 3) {
        Rat x = random_rat(rng, -20, 20, 7);
        if (std::find(xs.begin(), xs.end(), x) == xs.end()) xs.push_back(std::move(x));
      }
      std::sort(xs.begin(), xs.end());
      dirs.assign(3, Direction(Rat(0), Rat(1)));
      for (std::size_t t = 0; t < 3; ++t) {
        const auto s = static_cast<std::size_t>(order->source[t]);
        const Direction d = vertical_to_direction(xs[t]);
        const Rat scale = random_rat(rng, 1, 4, 5).abs() + Rat(1, 5);
        const Direction scaled(d.dx() * scale, d.dy() * scale);
        dirs[s] = aps.flipped[s] ? scaled.negated() : scaled;
      }
      // A random orientation-preserving linear map keeps the radial order.
      long a = 0;
      long b = 0;
      long c = 0;
      long d = 0;
      do {
        a = entry(rng);
        b = entry(rng);
        c = entry(rng);
        d = entry(rng);
      } while (a * d - b * c <= 0);
      for (auto& v : dirs) v = Direction(Rat(a) * v.dx() + Rat(b) * v.dy(), Rat(c) * v.dx() + Rat(d) * v.dy());
    } else {
      for (int t = 0; t < 3; ++t) {
        Rat dx = random_rat(rng, -5, 5, 3);
        Rat dy = random_rat(rng, -5, 5, 3);
        if (dx.is_zero() && dy.is_zero()) dy = Rat(1);
        dirs.emplace_back(std::move(dx), std::move(dy));
      }
    }
    ++report.trials;
    if (is_embedding(solve_fixed(paths, dirs)) == report.canonical_feasible) {
      ++report.agreements;
    } else {
      report.counterexamples.push_back(dirs);
    }
  }
  return report;
}

}  // namespace monoseq
