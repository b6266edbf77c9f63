#pragma once

#include "monoseq/duality.hpp"
#include "monoseq/geometry.hpp"
#include "monoseq/lp.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace monoseq {

// Variable layout of the embedding LP: y(i, j) is the ordinate where dual line
// j (1-based) meets vertical line i (0-based), stored at i * n + (j - 1).
struct EmbeddingLayout {
  int k;
  int n;

  [[nodiscard]] std::size_t y(int line, int label) const {
    return static_cast<std::size_t>(line) * static_cast<std::size_t>(n) + static_cast<std::size_t>(label - 1);
  }
  [[nodiscard]] std::size_t num_vars() const { return static_cast<std::size_t>(k) * static_cast<std::size_t>(n); }
};

// Rows:
//  - gap: y(i, l) - y(i, m) >= 1 for consecutive l, m along seq[i] (read top down);
//  - collinearity: q_i (y(1, j) - y(0, j)) = q_0 (y(i+1, j) - y(i, j)), 1 <= i <= k-2;
//  - normalization: y(0, 1) = 0.
// Throws std::invalid_argument when |seq| != cfg.k() or path lengths differ.
LpProblem build_embedding_lp(std::span<const PathPerm> seq, const VerticalLineConfig& cfg);

// Dual lines through the solution's ordinates on the first two vertical lines.
std::vector<DualLine> recover_lines(const LpSolution& solution, const VerticalLineConfig& cfg, int n);

}  // namespace monoseq
