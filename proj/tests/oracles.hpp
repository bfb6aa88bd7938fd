#pragma once

// Reference computations used only by the tests. None of them call into the
// library's solvers: small linear programs are solved by enumerating basic
// solutions, and decompositions are searched on a grid.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Q = mpq_class;
using Vec = std::vector<Q>;
using Mat = std::vector<Vec>;

inline Q q(long num, long den = 1) {
  Q r(num, den);
  r.canonicalize();
  return r;
}

inline Q l1(const Vec& w, const Vec& x) {
  Q s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += w[i] * abs(x[i]);
  return s;
}

inline Q linf(const Vec& w, const Vec& x) {
  Q s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s = std::max<Q>(s, abs(x[i]) / w[i]);
  return s;
}

// Unique solution of the square system A x = b, by fraction-exact elimination.
inline std::optional<Vec> solve_square(Mat a, Vec b) {
  const std::size_t n = b.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const Q f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  Vec x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

// min c.x subject to A x >= b, x >= 0, by enumerating every basic solution.
// Exponential; meant for a handful of variables. nullopt when infeasible.
inline std::optional<Q> lp_min(const Vec& c, const Mat& a, const Vec& b) {
  const std::size_t k = c.size(), m = a.size();
  // Candidate tight set: rows 0..m-1 are A_r x = b_r, rows m..m+k-1 are x_j = 0.
  std::optional<Q> best;
  std::vector<bool> pick(m + k, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
  std::sort(pick.begin(), pick.end());
  do {
    Mat sys;
    Vec rhs;
    for (std::size_t t = 0; t < m + k; ++t) {
      if (!pick[t]) continue;
      if (t < m) {
        sys.push_back(a[t]);
        rhs.push_back(b[t]);
      } else {
        Vec e(k, Q(0));
        e[t - m] = 1;
        sys.push_back(e);
        rhs.push_back(0);
      }
    }
    const auto x = solve_square(sys, rhs);
    if (!x) continue;
    bool feasible = std::all_of(x->begin(), x->end(), [](const Q& v) { return v >= 0; });
    for (std::size_t r = 0; feasible && r < m; ++r) {
      Q s = 0;
      for (std::size_t j = 0; j < k; ++j) s += a[r][j] * (*x)[j];
      feasible = s >= b[r];
    }
    if (!feasible) continue;
    Q v = 0;
    for (std::size_t j = 0; j < k; ++j) v += c[j] * (*x)[j];
    if (!best || v < *best) best = v;
  } while (std::next_permutation(pick.begin(), pick.end()));
  return best;
}

// Gauge of Conv_b(Sol(gens)) at x: min sum lambda_k with |x| <= sum lambda_k |g_k|.
inline std::optional<Q> polyhedral_gauge(const std::vector<Vec>& gens, const Vec& x) {
  Mat a(x.size(), Vec(gens.size()));
  Vec b(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    b[i] = abs(x[i]);
    for (std::size_t k = 0; k < gens.size(); ++k) a[i][k] = abs(gens[k][i]);
  }
  return lp_min(Vec(gens.size(), Q(1)), a, b);
}

// Projective value from the extreme points of the two positive unit balls:
// min sum t_ab over t >= 0 with sum t_ab a (x) b >= |u|.
inline std::optional<Q> projective_value(const std::vector<Vec>& atoms_p, const std::vector<Vec>& atoms_q, const Mat& u) {
  const std::size_t n = u.size(), m = u.front().size();
  Mat a(n * m);
  Vec b(n * m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) b[i * m + j] = abs(u[i][j]);
  for (const auto& x : atoms_p)
    for (const auto& y : atoms_q)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) a[i * m + j].push_back(x[i] * y[j]);
  return lp_min(Vec(atoms_p.size() * atoms_q.size(), Q(1)), a, b);
}

// Grid search over decompositions of a 2x2 |u| into at most kTerms rank-one
// terms x (x) y with x, y in {0, 1/8, ..., 2}^2. Coverage is rounded down to
// the 1/8 grid, so every value found belongs to a genuine decomposition and
// is an upper bound for the projective value. One table serves every |u|
// with entries in the grid.
class GridOracle {
 public:
  static constexpr int kSteps = 16;  // grid 0..2 in units of 1/8
  static constexpr int kTerms = 4;
  static constexpr std::int64_t kInf = INT64_MAX / 4;

  // cost(x, y) in units of 1/64, x and y in units of 1/8.
  explicit GridOracle(const std::function<std::int64_t(const std::array<int, 2>&, const std::array<int, 2>&)>& cost) {
    constexpr int S = kSteps + 1;
    std::vector<std::int64_t> best(kStates, kInf);
    for (int x0 = 0; x0 < S; ++x0)
      for (int x1 = 0; x1 < S; ++x1)
        for (int y0 = 0; y0 < S; ++y0)
          for (int y1 = 0; y1 < S; ++y1) {
            const std::array<int, 2> x{x0, x1}, y{y0, y1};
            std::array<int, 4> cover{};
            for (int i = 0; i < 2; ++i)
              for (int j = 0; j < 2; ++j) cover[i * 2 + j] = std::min(kSteps, x[i] * y[j] / 8);
            const int key = index(cover);
            best[key] = std::min(best[key], cost(x, y));
          }
    for (int key = 1; key < kStates; ++key)
      if (best[key] < kInf) terms_.push_back({decode(key), best[key]});
    // Drop terms that another term covers at no greater cost.
    std::vector<Term> kept;
    for (const auto& t : terms_) {
      bool dominated = false;
      for (const auto& o : terms_) {
        if (&o == &t || o.cost > t.cost) continue;
        bool covers = true;
        for (int e = 0; e < 4; ++e) covers = covers && o.cover[e] >= t.cover[e];
        if (covers && (o.cost < t.cost || o.cover != t.cover)) {
          dominated = true;
          break;
        }
      }
      if (!dominated) kept.push_back(t);
    }
    terms_ = std::move(kept);

    std::vector<std::int64_t> f(kStates, kInf);
    f[0] = 0;
    for (int k = 0; k < kTerms; ++k) {
      std::vector<std::int64_t> g = f;
      for (int key = 1; key < kStates; ++key) {
        const auto d = decode(key);
        for (const auto& t : terms_) {
          std::array<int, 4> rest{};
          for (int e = 0; e < 4; ++e) rest[e] = std::max(0, d[e] - t.cover[e]);
          const std::int64_t prev = f[index(rest)];
          if (prev < kInf) g[key] = std::min(g[key], prev + t.cost);
        }
      }
      f = std::move(g);
    }
    table_ = std::move(f);
  }

  std::size_t term_count() const { return terms_.size(); }

  // Best grid value for |u|, entries of |u| multiples of 1/8 in [0, 2].
  Q value(const Mat& u) const {
    std::array<int, 4> d{};
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        const Q scaled = abs(u[i][j]) * 8;
        d[i * 2 + j] = static_cast<int>(scaled.get_num().get_si() / scaled.get_den().get_si());
      }
    return q(static_cast<long>(table_[index(d)]), 64);
  }

 private:
  static constexpr int kStates = (kSteps + 1) * (kSteps + 1) * (kSteps + 1) * (kSteps + 1);
  struct Term {
    std::array<int, 4> cover;
    std::int64_t cost;
  };
  static int index(const std::array<int, 4>& c) {
    return ((c[0] * (kSteps + 1) + c[1]) * (kSteps + 1) + c[2]) * (kSteps + 1) + c[3];
  }
  static std::array<int, 4> decode(int key) {
    std::array<int, 4> c{};
    for (int e = 3; e >= 0; --e) {
      c[e] = key % (kSteps + 1);
      key /= kSteps + 1;
    }
    return c;
  }

  std::vector<Term> terms_;
  std::vector<std::int64_t> table_;
};

inline std::int64_t l1_cost(const std::array<int, 2>& x, const std::array<int, 2>& y) {
  return static_cast<std::int64_t>(x[0] + x[1]) * (y[0] + y[1]);
}

inline std::int64_t linf_cost(const std::array<int, 2>& x, const std::array<int, 2>& y) {
  return static_cast<std::int64_t>(std::max(x[0], x[1])) * std::max(y[0], y[1]);
}

}  // namespace oracle
