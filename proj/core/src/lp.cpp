#include "monoseq/lp.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace monoseq {

LinearExpr& LinearExpr::add(std::size_t var, const Rat& coeff) {
  if (coeff.is_zero()) return *this;
  auto it = std::find_if(terms.begin(), terms.end(), [var](const auto& t) { return t.first == var; });
  if (it == terms.end()) {
    terms.emplace_back(var, coeff);
  } else {
    it->second += coeff;
    if (it->second.is_zero()) terms.erase(it);
  }
  return *this;
}

Rat LinearExpr::evaluate(const std::vector<Rat>& x) const {
  Rat sum;
  for (const auto& [var, coeff] : terms) sum += coeff * x.at(var);
  return sum;
}

std::size_t LpProblem::add_row(LinearExpr lhs, Relation relation, Rat rhs) {
  for (const auto& [var, coeff] : lhs.terms) {
    if (var >= num_vars_) throw std::out_of_range("LP row references variable " + std::to_string(var));
  }
  rows_.push_back(LinearRow{std::move(lhs), relation, std::move(rhs)});
  return rows_.size() - 1;
}

bool LpProblem::satisfied_by(const std::vector<Rat>& x) const {
  if (x.size() != num_vars_) return false;
  return std::all_of(rows_.begin(), rows_.end(), [&](const LinearRow& row) {
    const Rat lhs = row.lhs.evaluate(x);
    return row.relation == Relation::Equal ? lhs == row.rhs : lhs >= row.rhs;
  });
}

Rat FarkasCertificate::combined_rhs(const LpProblem& problem) const {
  Rat sum;
  for (std::size_t r = 0; r < problem.rows().size(); ++r) sum += multipliers.at(r) * problem.rows()[r].rhs;
  return sum;
}

bool FarkasCertificate::verifies(const LpProblem& problem) const {
  const auto& rows = problem.rows();
  if (multipliers.size() != rows.size()) return false;
  std::vector<Rat> combined(problem.num_vars());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const Rat& lambda = multipliers[r];
    if (rows[r].relation == Relation::GreaterEqual && lambda.sign() < 0) return false;
    for (const auto& [var, coeff] : rows[r].lhs.terms) combined[var] += lambda * coeff;
  }
  const bool zero_lhs = std::all_of(combined.begin(), combined.end(), [](const Rat& c) { return c.is_zero(); });
  return zero_lhs && combined_rhs(problem).sign() > 0;
}

namespace {

// Dense tableau over the standard form
//   sigma_r * (a_r x+ - a_r x- - s_r) + art_r = sigma_r * b_r,  all vars >= 0,
// where sigma_r makes the right-hand side nonnegative.
class Tableau {
 public:
  explicit Tableau(const LpProblem& problem) {
    const auto& rows = problem.rows();
    m_ = rows.size();
    nv_ = problem.num_vars();
    std::size_t surplus = 0;
    surplus_col_.assign(m_, npos);
    for (std::size_t r = 0; r < m_; ++r) {
      if (rows[r].relation == Relation::GreaterEqual) surplus_col_[r] = 2 * nv_ + surplus++;
    }
    art_begin_ = 2 * nv_ + surplus;
    rhs_ = art_begin_ + m_;
    t_.assign(m_, std::vector<mpq_class>(rhs_ + 1));
    sigma_.assign(m_, 1);
    basis_.assign(m_, 0);
    active_.assign(m_, true);
    for (std::size_t r = 0; r < m_; ++r) {
      const auto& row = rows[r];
      sigma_[r] = row.rhs.sign() < 0 ? -1 : 1;
      const mpq_class s(sigma_[r]);
      auto& tr = t_[r];
      for (const auto& [var, coeff] : row.lhs.terms) {
        tr[2 * var] += s * coeff.get();
        tr[2 * var + 1] -= s * coeff.get();
      }
      if (surplus_col_[r] != npos) tr[surplus_col_[r]] = -s;
      tr[art_begin_ + r] = 1;
      tr[rhs_] = s * row.rhs.get();
      basis_[r] = art_begin_ + r;
    }
  }

  // Phase 1: minimise the sum of artificials. Returns the optimal sum.
  mpq_class phase_one() {
    obj_.assign(rhs_ + 1, 0);
    for (std::size_t r = 0; r < m_; ++r) {
      for (std::size_t j = 0; j < art_begin_; ++j) obj_[j] -= t_[r][j];
      obj_[rhs_] -= t_[r][rhs_];
    }
    run();
    return -obj_[rhs_];
  }

  FarkasCertificate certificate() const {
    FarkasCertificate cert;
    cert.multipliers.reserve(m_);
    for (std::size_t r = 0; r < m_; ++r) {
      const mpq_class y = 1 - obj_[art_begin_ + r];
      cert.multipliers.emplace_back(mpq_class(sigma_[r] * y));
    }
    return cert;
  }

  // Pivots zero-level artificials out of the basis; rows that cannot be
  // pivoted are linearly dependent and dropped.
  void drive_out_artificials() {
    for (std::size_t r = 0; r < m_; ++r) {
      if (basis_[r] < art_begin_) continue;
      std::size_t col = npos;
      for (std::size_t j = 0; j < art_begin_; ++j) {
        if (sgn(t_[r][j]) != 0) {
          col = j;
          break;
        }
      }
      if (col == npos) {
        active_[r] = false;
      } else {
        pivot(r, col);
      }
    }
  }

  // Phase 2 on the feasible basis. Returns false when unbounded.
  bool phase_two(const LinearExpr& objective) {
    std::vector<mpq_class> cost(rhs_, 0);
    for (const auto& [var, coeff] : objective.terms) {
      if (var >= nv_) throw std::out_of_range("objective references variable " + std::to_string(var));
      cost[2 * var] += coeff.get();
      cost[2 * var + 1] -= coeff.get();
    }
    obj_.assign(rhs_ + 1, 0);
    for (std::size_t j = 0; j < rhs_; ++j) obj_[j] = cost[j];
    for (std::size_t r = 0; r < m_; ++r) {
      if (!active_[r]) continue;
      const mpq_class& cb = cost[basis_[r]];
      if (sgn(cb) == 0) continue;
      for (std::size_t j = 0; j <= rhs_; ++j) {
        if (sgn(t_[r][j]) != 0) obj_[j] -= cb * t_[r][j];
      }
    }
    return run();
  }

  [[nodiscard]] std::vector<Rat> primal() const {
    std::vector<mpq_class> col_value(art_begin_, 0);
    for (std::size_t r = 0; r < m_; ++r) {
      if (active_[r] && basis_[r] < art_begin_) col_value[basis_[r]] = t_[r][rhs_];
    }
    std::vector<Rat> x;
    x.reserve(nv_);
    for (std::size_t v = 0; v < nv_; ++v) x.emplace_back(mpq_class(col_value[2 * v] - col_value[2 * v + 1]));
    return x;
  }

  [[nodiscard]] mpq_class objective_value() const { return -obj_[rhs_]; }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  // Bland's rule over structural and surplus columns. Returns false on an
  // unbounded direction.
  bool run() {
    for (;;) {
      std::size_t enter = npos;
      for (std::size_t j = 0; j < art_begin_; ++j) {
        if (sgn(obj_[j]) < 0) {
          enter = j;
          break;
        }
      }
      if (enter == npos) return true;
      std::size_t leave = npos;
      mpq_class best;
      for (std::size_t r = 0; r < m_; ++r) {
        if (!active_[r] || sgn(t_[r][enter]) <= 0) continue;
        mpq_class ratio = t_[r][rhs_] / t_[r][enter];
        if (leave == npos || ratio < best || (ratio == best && basis_[r] < basis_[leave])) {
          leave = r;
          best = std::move(ratio);
        }
      }
      if (leave == npos) return false;
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    auto& pr = t_[r];
    const mpq_class inv = 1 / pr[c];
    std::vector<std::size_t> nz;
    for (std::size_t j = 0; j <= rhs_; ++j) {
      if (sgn(pr[j]) != 0) {
        pr[j] *= inv;
        nz.push_back(j);
      }
    }
    const auto eliminate = [&](std::vector<mpq_class>& row) {
      if (sgn(row[c]) == 0) return;
      const mpq_class f = row[c];
      for (std::size_t j : nz) row[j] -= f * pr[j];
    };
    for (std::size_t i = 0; i < m_; ++i) {
      if (i != r && active_[i]) eliminate(t_[i]);
    }
    eliminate(obj_);
    basis_[r] = c;
  }

  std::size_t m_ = 0;
  std::size_t nv_ = 0;
  std::size_t art_begin_ = 0;
  std::size_t rhs_ = 0;
  std::vector<std::size_t> surplus_col_;
  std::vector<std::vector<mpq_class>> t_;
  std::vector<mpq_class> obj_;
  std::vector<int> sigma_;
  std::vector<std::size_t> basis_;
  std::vector<bool> active_;
};

}  // namespace

FeasibilityResult feasible(const LpProblem& problem) {
  Tableau tab(problem);
  if (sgn(tab.phase_one()) > 0) return tab.certificate();
  tab.drive_out_artificials();
  return LpSolution{tab.primal()};
}

OptimizationResult minimize(const LpProblem& problem, const LinearExpr& objective) {
  Tableau tab(problem);
  if (sgn(tab.phase_one()) > 0) return tab.certificate();
  tab.drive_out_artificials();
  if (!tab.phase_two(objective)) return Unbounded{};
  return Optimum{LpSolution{tab.primal()}, Rat(tab.objective_value())};
}

namespace {

std::string var_name(const LpProblem& p, std::size_t v) {
  return p.name(v).empty() ? "x" + std::to_string(v) : p.name(v);
}

// Multiplies an expression (and rhs) by the lcm of its denominators so every
// coefficient is an integer; LP text readers do not accept p/q literals.
mpz_class row_scale(const LinearExpr& e, const Rat& rhs) {
  mpz_class l = rhs.denominator();
  for (const auto& term : e.terms) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), term.second.denominator().get_mpz_t());
  return l;
}

void write_expr(std::ostream& os, const LpProblem& p, const LinearExpr& e, const mpz_class& scale) {
  if (e.terms.empty()) {
    os << "0 " << var_name(p, 0);
    return;
  }
  bool first = true;
  for (const auto& [var, coeff] : e.terms) {
    const Rat c = coeff * Rat(scale);
    os << (c.sign() < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    os << c.abs().str() << ' ' << var_name(p, var);
    first = false;
  }
}

}  // namespace

std::string to_lp_format(const LpProblem& problem, const std::optional<LinearExpr>& objective) {
  std::ostringstream os;
  os << "\\ rows are scaled to integer coefficients; the objective is scaled by a positive constant\n";
  os << "Minimize\n obj: ";
  const LinearExpr obj = objective.value_or(LinearExpr{});
  write_expr(os, problem, obj, row_scale(obj, Rat(0)));
  os << "\nSubject To\n";
  for (std::size_t r = 0; r < problem.rows().size(); ++r) {
    const auto& row = problem.rows()[r];
    const mpz_class scale = row_scale(row.lhs, row.rhs);
    os << " c" << r << ": ";
    write_expr(os, problem, row.lhs, scale);
    os << (row.relation == Relation::Equal ? " = " : " >= ") << (row.rhs * Rat(scale)).str() << '\n';
  }
  os << "Bounds\n";
  for (std::size_t v = 0; v < problem.num_vars(); ++v) os << ' ' << var_name(problem, v) << " free\n";
  os << "End\n";
  return os.str();
}

}  // namespace monoseq
