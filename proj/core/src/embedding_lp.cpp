#include "monoseq/embedding_lp.hpp"

#include <stdexcept>
#include <string>

namespace monoseq {

LpProblem build_embedding_lp(std::span<const PathPerm> seq, const VerticalLineConfig& cfg) {
  if (seq.empty() || static_cast<int>(seq.size()) != cfg.k()) {
    throw std::invalid_argument("embedding LP needs one vertical line per path (" + std::to_string(seq.size()) +
                                " paths, " + std::to_string(cfg.k()) + " lines)");
  }
  const EmbeddingLayout layout{cfg.k(), seq.front().size()};
  LpProblem lp(layout.num_vars());
  for (int i = 0; i < layout.k; ++i) {
    for (int j = 1; j <= layout.n; ++j) {
      lp.set_name(layout.y(i, j), "y_" + std::to_string(i + 1) + "_" + std::to_string(j));
    }
  }

  for (int i = 0; i < layout.k; ++i) {
    const auto& path = seq[static_cast<std::size_t>(i)];
    if (path.size() != layout.n) throw std::invalid_argument("paths of an embedding LP must share n");
    for (int t = 0; t + 1 < layout.n; ++t) {
      LinearExpr row;
      row.add(layout.y(i, path.at(t)), Rat(1)).add(layout.y(i, path.at(t + 1)), Rat(-1));
      lp.add_row(std::move(row), Relation::GreaterEqual, Rat(1));
    }
  }

  if (layout.k >= 3) {
    const Rat q0 = cfg.gap(0);
    for (int j = 1; j <= layout.n; ++j) {
      for (int i = 1; i + 1 < layout.k; ++i) {
        const Rat qi = cfg.gap(i);
        LinearExpr row;
        row.add(layout.y(1, j), qi).add(layout.y(0, j), -qi);
        row.add(layout.y(i + 1, j), -q0).add(layout.y(i, j), q0);
        lp.add_row(std::move(row), Relation::Equal, Rat(0));
      }
    }
  }

  LinearExpr anchor;
  anchor.add(layout.y(0, 1), Rat(1));
  lp.add_row(std::move(anchor), Relation::Equal, Rat(0));
  return lp;
}

std::vector<DualLine> recover_lines(const LpSolution& solution, const VerticalLineConfig& cfg, int n) {
  if (cfg.k() < 2) throw std::invalid_argument("recovering lines needs at least two vertical lines");
  const EmbeddingLayout layout{cfg.k(), n};
  if (solution.values.size() != layout.num_vars()) throw std::invalid_argument("solution size does not match layout");
  const Rat q0 = cfg.gap(0);
  std::vector<DualLine> lines;
  lines.reserve(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    const Rat& y0 = solution.values[layout.y(0, j)];
    const Rat& y1 = solution.values[layout.y(1, j)];
    const Rat slope = (y1 - y0) / q0;
    lines.push_back(DualLine{slope, y0 - slope * cfg.x(0)});
  }
  return lines;
}

}  // namespace monoseq
