#include "fremlin/lp.hpp"

#include <utility>

#include "fremlin/errors.hpp"

namespace fremlin {

void LinearProgram::set_objective(std::vector<Rational> costs) {
  if (costs.size() != objective_.size()) throw DimensionMismatch(objective_.size(), costs.size());
  objective_ = std::move(costs);
}

void LinearProgram::add_constraint(std::vector<Rational> coeffs, Sense sense, Rational rhs) {
  if (coeffs.size() != objective_.size()) throw DimensionMismatch(objective_.size(), coeffs.size());
  rows_.push_back({std::move(coeffs), sense, std::move(rhs)});
}

namespace {

using Row = std::vector<Rational>;

class Tableau {
 public:
  // Columns [0, n) original, then slack/surplus, then artificial; last column is the rhs.
  explicit Tableau(const LinearProgram& lp) : n_(lp.num_vars()) {
    const auto& rows = lp.constraints();
    std::size_t slacks = 0, artificials = 0;
    for (const auto& r : rows) {
      const bool flip = r.rhs < 0;
      const Sense s = flip ? mirror(r.sense) : r.sense;
      if (s != Sense::Equal) ++slacks;
      if (s != Sense::LessEqual) ++artificials;
    }
    first_artificial_ = n_ + slacks;
    cols_ = first_artificial_ + artificials;
    t_.assign(rows.size(), Row(cols_ + 1));
    basis_.assign(rows.size(), 0);

    std::size_t slack = n_, art = first_artificial_;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& r = rows[i];
      const bool flip = r.rhs < 0;
      const Sense s = flip ? mirror(r.sense) : r.sense;
      for (std::size_t j = 0; j < n_; ++j)
        if (r.coeffs[j] != 0) t_[i][j] = flip ? Rational(-r.coeffs[j]) : r.coeffs[j];
      t_[i][cols_] = flip ? Rational(-r.rhs) : r.rhs;
      if (s == Sense::LessEqual) {
        t_[i][slack] = 1;
        basis_[i] = slack++;
      } else if (s == Sense::GreaterEqual) {
        t_[i][slack++] = -1;
        t_[i][art] = 1;
        basis_[i] = art++;
      } else {
        t_[i][art] = 1;
        basis_[i] = art++;
      }
    }
  }

  LpSolution solve(const LinearProgram& lp) {
    LpSolution out;
    // Phase 1: minimize the sum of artificials.
    if (first_artificial_ < cols_) {
      Row cost(cols_);
      for (std::size_t j = first_artificial_; j < cols_; ++j) cost[j] = 1;
      load_objective(cost);
      run(cols_);
      if (z_[cols_] != 0) {  // z_[rhs] holds -objective
        out.status = LpStatus::Infeasible;
        return out;
      }
      expel_artificials();
    }
    Row cost(cols_);
    for (std::size_t j = 0; j < n_; ++j) cost[j] = lp.objective()[j];
    load_objective(cost);
    if (!run(first_artificial_)) {
      out.status = LpStatus::Unbounded;
      return out;
    }
    out.status = LpStatus::Optimal;
    out.x.assign(n_, Rational(0));
    for (std::size_t i = 0; i < t_.size(); ++i)
      if (basis_[i] < n_) out.x[basis_[i]] = t_[i][cols_];
    out.objective = -z_[cols_];
    return out;
  }

 private:
  static Sense mirror(Sense s) {
    if (s == Sense::LessEqual) return Sense::GreaterEqual;
    if (s == Sense::GreaterEqual) return Sense::LessEqual;
    return s;
  }

  void load_objective(const Row& cost) {
    z_.assign(cols_ + 1, Rational(0));
    for (std::size_t j = 0; j < cols_; ++j) z_[j] = cost[j];
    for (std::size_t i = 0; i < t_.size(); ++i) {
      const Rational& cb = cost[basis_[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j <= cols_; ++j)
        if (t_[i][j] != 0) z_[j] -= cb * t_[i][j];
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    Row& p = t_[row];
    const Rational inv = 1 / p[col];
    for (auto& v : p)
      if (v != 0) v *= inv;
    Rational f;
    for (std::size_t i = 0; i < t_.size(); ++i) {
      if (i == row || t_[i][col] == 0) continue;
      f = t_[i][col];
      for (std::size_t j = 0; j <= cols_; ++j)
        if (p[j] != 0) t_[i][j] -= f * p[j];
    }
    if (z_[col] != 0) {
      f = z_[col];
      for (std::size_t j = 0; j <= cols_; ++j)
        if (p[j] != 0) z_[j] -= f * p[j];
    }
    basis_[row] = col;
  }

  // Bland's rule over columns [0, limit). Returns false when unbounded.
  bool run(std::size_t limit) {
    for (;;) {
      std::size_t enter = limit;
      for (std::size_t j = 0; j < limit; ++j)
        if (z_[j] < 0) {
          enter = j;
          break;
        }
      if (enter == limit) return true;
      std::size_t leave = t_.size();
      Rational best;
      for (std::size_t i = 0; i < t_.size(); ++i) {
        if (t_[i][enter] <= 0) continue;
        Rational ratio = t_[i][cols_] / t_[i][enter];
        if (leave == t_.size() || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          best = std::move(ratio);
          leave = i;
        }
      }
      if (leave == t_.size()) return false;
      pivot(leave, enter);
    }
  }

  void expel_artificials() {
    for (std::size_t i = 0; i < t_.size();) {
      if (basis_[i] < first_artificial_) {
        ++i;
        continue;
      }
      std::size_t col = first_artificial_;
      for (std::size_t j = 0; j < first_artificial_; ++j)
        if (t_[i][j] != 0) {
          col = j;
          break;
        }
      if (col < first_artificial_) {
        pivot(i, col);
        ++i;
      } else {  // redundant row
        t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
  }

  std::size_t n_;
  std::size_t first_artificial_ = 0;
  std::size_t cols_ = 0;
  std::vector<Row> t_;
  std::vector<std::size_t> basis_;
  Row z_;
};

}  // namespace

LpSolution solve(const LinearProgram& program) {
  Tableau tableau(program);
  return tableau.solve(program);
}

bool is_feasible(const LinearProgram& program) {
  LinearProgram feasibility(program.num_vars());
  for (const auto& r : program.constraints()) feasibility.add_constraint(r.coeffs, r.sense, r.rhs);
  return solve(feasibility).status == LpStatus::Optimal;
}

std::optional<std::vector<Rational>> solve_linear_system(std::vector<std::vector<Rational>> a,
                                                         std::vector<Rational> b) {
  const std::size_t rows = a.size();
  if (rows != b.size()) throw DimensionMismatch(rows, b.size());
  const std::size_t cols = rows == 0 ? 0 : a.front().size();
  std::size_t r = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) return std::nullopt;  // free column: not unique
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    const Rational inv = 1 / a[r][c];
    for (auto& v : a[r]) v *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  if (r < cols) return std::nullopt;
  for (std::size_t i = r; i < rows; ++i)
    if (b[i] != 0) return std::nullopt;
  std::vector<Rational> x(cols);
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = b[i];
  return x;
}

}  // namespace fremlin
