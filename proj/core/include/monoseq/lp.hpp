#pragma once

#include "monoseq/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace monoseq {

enum class Relation { GreaterEqual, Equal };

// Sparse linear expression: sum of coefficient * x[var].
struct LinearExpr {
  std::vector<std::pair<std::size_t, Rat>> terms;

  LinearExpr& add(std::size_t var, const Rat& coeff);
  [[nodiscard]] Rat evaluate(const std::vector<Rat>& x) const;
};

struct LinearRow {
  LinearExpr lhs;
  Relation relation = Relation::GreaterEqual;
  Rat rhs;
};

// Linear feasibility problem over free (unbounded) rational variables.
class LpProblem {
 public:
  explicit LpProblem(std::size_t num_vars) : num_vars_(num_vars), names_(num_vars) {}

  [[nodiscard]] std::size_t num_vars() const { return num_vars_; }
  [[nodiscard]] const std::vector<LinearRow>& rows() const { return rows_; }
  [[nodiscard]] const std::string& name(std::size_t var) const { return names_[var]; }
  void set_name(std::size_t var, std::string name) { names_.at(var) = std::move(name); }

  // Returns the index of the new row. Throws std::out_of_range on bad indices.
  std::size_t add_row(LinearExpr lhs, Relation relation, Rat rhs);

  // True iff x satisfies every row exactly.
  [[nodiscard]] bool satisfied_by(const std::vector<Rat>& x) const;

 private:
  std::size_t num_vars_;
  std::vector<std::string> names_;
  std::vector<LinearRow> rows_;
};

struct LpSolution {
  std::vector<Rat> values;
};

// Multipliers, one per row, nonnegative on >= rows and free on = rows, whose
// combination of the rows reads 0 >= (positive constant).
struct FarkasCertificate {
  std::vector<Rat> multipliers;

  [[nodiscard]] bool verifies(const LpProblem& problem) const;
  // Right-hand side of the combined row; positive for a valid certificate.
  [[nodiscard]] Rat combined_rhs(const LpProblem& problem) const;
};

struct Unbounded {};

using FeasibilityResult = std::variant<LpSolution, FarkasCertificate>;

struct Optimum {
  LpSolution solution;
  Rat value;
};
using OptimizationResult = std::variant<Optimum, FarkasCertificate, Unbounded>;

// Two-phase dense simplex in exact arithmetic with Bland's rule.
FeasibilityResult feasible(const LpProblem& problem);
OptimizationResult minimize(const LpProblem& problem, const LinearExpr& objective);

// CPLEX LP text format, for cross-checking with external solvers.
std::string to_lp_format(const LpProblem& problem, const std::optional<LinearExpr>& objective = std::nullopt);

}  // namespace monoseq
