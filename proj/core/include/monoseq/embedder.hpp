#pragma once

#include "monoseq/duality.hpp"
#include "monoseq/geometry.hpp"
#include "monoseq/lp.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace monoseq {

enum class Provenance { TwoPath, FixedDirections, ThreeFree };

std::string to_string(Provenance p);

struct Embedding {
  PointSet points;
  std::vector<Direction> directions;  // one per path, in path order
  Provenance provenance;
};

enum class NoReason { NotAdjustable, NotAllowable, RadialOrderMismatch, LpInfeasible };

std::string to_string(NoReason r);

struct NoEmbedding {
  NoReason reason;
  std::string detail;
  // Set for LpInfeasible: the system and a certificate that verifies against it.
  std::optional<LpProblem> problem;
  std::optional<FarkasCertificate> certificate;
};

using EmbedResult = std::variant<Embedding, NoEmbedding>;

[[nodiscard]] inline bool is_embedding(const EmbedResult& r) { return std::holds_alternative<Embedding>(r); }

struct VerifyResult {
  bool ok = true;
  std::string diagnostic;

  explicit operator bool() const { return ok; }
};

// Checks that projecting onto dirs[i] orders the points as paths[i] (or its
// reverse when allow_reverse). Ties are reported as failures. Throws
// std::invalid_argument on mismatched sizes.
VerifyResult verify(const PointSet& points, std::span<const Direction> dirs, const PathSet& paths, bool allow_reverse);

// Two-path construction: dual line of v meets x_1 at -rank_1(v) and x_2 at
// -rank_2(v). Throws std::invalid_argument unless cfg.k() == 2 and sizes match.
Embedding embed_two_paths(const PathPerm& p1, const PathPerm& p2, const VerticalLineConfig& cfg);

// Decides a fixed-direction instance. Throws std::invalid_argument when
// |paths| != |dirs|.
EmbedResult solve_fixed(const PathSet& paths, std::span<const Direction> dirs);

// Decides a three-path instance with free directions, on canonical vertical
// lines x = 0, 1, 2. Throws std::invalid_argument unless k == 3.
EmbedResult solve_three_free(const PathSet& paths);

struct Theorem3Report {
  int trials = 0;
  int agreements = 0;
  bool canonical_feasible = false;
  std::vector<std::vector<Direction>> counterexamples;

  [[nodiscard]] bool consistent() const { return agreements == trials; }
};

// Samples direction triples with the radial order of the allowable sequence and
// compares solve_fixed with solve_three_free. Throws std::invalid_argument
// unless k == 3.
Theorem3Report theorem3_consistency(const PathSet& paths, int trials, std::uint64_t seed);

}  // namespace monoseq
