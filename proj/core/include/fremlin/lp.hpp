#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fremlin/rational.hpp"

namespace fremlin {

enum class Sense { LessEqual, Equal, GreaterEqual };

struct Constraint {
  std::vector<Rational> coeffs;
  Sense sense;
  Rational rhs;
};

/// minimize c.x  subject to  rows,  x >= 0.  Everything is exact.
class LinearProgram {
 public:
  explicit LinearProgram(std::size_t num_vars) : objective_(num_vars) {}

  std::size_t num_vars() const noexcept { return objective_.size(); }
  const std::vector<Rational>& objective() const noexcept { return objective_; }
  const std::vector<Constraint>& constraints() const noexcept { return rows_; }

  void set_objective(std::vector<Rational> costs);
  void set_cost(std::size_t var, Rational cost) { objective_.at(var) = std::move(cost); }
  void add_constraint(std::vector<Rational> coeffs, Sense sense, Rational rhs);

 private:
  std::vector<Rational> objective_;
  std::vector<Constraint> rows_;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  std::vector<Rational> x;
  Rational objective;
};

/// Two-phase dense tableau simplex with Bland's rule. Deterministic: the same
/// program always yields the same basic optimal solution.
LpSolution solve(const LinearProgram& program);

bool is_feasible(const LinearProgram& program);

/// Unique solution of a square or overdetermined consistent system A x = b by
/// Gauss-Jordan elimination; nullopt when the solution is not unique or the
/// system is inconsistent.
std::optional<std::vector<Rational>> solve_linear_system(std::vector<std::vector<Rational>> a,
                                                         std::vector<Rational> b);

}  // namespace fremlin
