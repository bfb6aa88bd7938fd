#include "fremlin/projective.hpp"

#include <utility>

#include "fremlin/errors.hpp"
#include "fremlin/lp.hpp"
#include "fremlin/parallel.hpp"

namespace fremlin {

TensorElement Decomposition::sum(std::size_t rows, std::size_t cols) const {
  TensorElement out(rows, cols);
  for (const auto& t : terms) out = out + rank_one(t.x, t.y);
  return out;
}

bool Decomposition::covers(const TensorElement& u) const {
  for (const auto& t : terms)
    if (!t.x.is_nonnegative() || !t.y.is_nonnegative() || t.x.dim() != u.rows() || t.y.dim() != u.cols())
      return false;
  return leq(abs(u), sum(u.rows(), u.cols()));
}

Rational Decomposition::value(const RieszSeminorm& p, const RieszSeminorm& q) const {
  Rational total;
  for (const auto& t : terms) {
    if (t.x.is_zero() || t.y.is_zero()) continue;
    total += p(t.x) * q(t.y);
  }
  return total;
}

Decomposition Decomposition::scaled(const Rational& lambda) const {
  Decomposition out;
  for (const auto& t : terms) out.terms.push_back({abs_value(lambda) * t.x, t.y});
  return out;
}

Decomposition Decomposition::concat(const Decomposition& other) const {
  Decomposition out = *this;
  out.terms.insert(out.terms.end(), other.terms.begin(), other.terms.end());
  return out;
}

namespace {

struct Product {
  LatticeElement x;
  LatticeElement y;
  bool priced;
  TensorElement tensor;
};

std::vector<Product> lifted_products(const RieszSeminorm& p, const RieszSeminorm& q) {
  const ConeModel cp = p.cone(), cq = q.cone();
  std::vector<Product> out;
  auto add = [&](const LatticeElement& x, const LatticeElement& y, bool priced) {
    out.push_back({x, y, priced, rank_one(x, y)});
  };
  for (const auto& a : cp.atoms)
    for (const auto& b : cq.atoms) add(a, b, true);
  for (const auto& a : cp.atoms)
    for (const auto& e : cq.rays) add(a, e, false);
  for (const auto& d : cp.rays)
    for (const auto& b : cq.atoms) add(d, b, false);
  for (const auto& d : cp.rays)
    for (const auto& e : cq.rays) add(d, e, false);
  return out;
}

void require_shape(const RieszSeminorm& p, const RieszSeminorm& q, const TensorElement& u) {
  if (p.dim() != u.rows()) throw DimensionMismatch(p.dim(), u.rows());
  if (q.dim() != u.cols()) throw DimensionMismatch(q.dim(), u.cols());
}

}  // namespace

bool DualCertificate::dominated_by(const RieszSeminorm& p, const RieszSeminorm& q) const {
  if (form.rows() != p.dim() || form.cols() != q.dim() || !form.is_nonnegative()) return false;
  for (const auto& prod : lifted_products(p, q)) {
    const Rational v = frobenius(form, prod.tensor);
    if (prod.priced ? v > 1 : v != 0) return false;
  }
  return true;
}

Rational DualCertificate::value(const TensorElement& u) const { return frobenius(form, abs(u)); }

bool verify(const SeminormCertificate& cert, const RieszSeminorm& p, const RieszSeminorm& q, const TensorElement& u) {
  return cert.lower <= cert.upper && cert.dual.dominated_by(p, q) && cert.dual.value(u) == cert.lower &&
         cert.decomposition.covers(u) && cert.decomposition.value(p, q) == cert.upper;
}

std::optional<Rational> seminorm_closed_form(const RieszSeminorm& p, const RieszSeminorm& q, const TensorElement& u) {
  require_shape(p, q, u);
  if (p.kind() == SeminormKind::WeightedL1 && q.kind() == SeminormKind::WeightedL1) {
    Rational s;
    for (std::size_t i = 0; i < u.rows(); ++i)
      for (std::size_t j = 0; j < u.cols(); ++j) s += p.weights()[i] * q.weights()[j] * abs_value(u(i, j));
    return s;
  }
  if (p.kind() == SeminormKind::WeightedOrderUnit && q.kind() == SeminormKind::WeightedOrderUnit) {
    Rational m;
    for (std::size_t i = 0; i < u.rows(); ++i)
      for (std::size_t j = 0; j < u.cols(); ++j) {
        Rational v = abs_value(u(i, j)) / (p.weights()[i] * q.weights()[j]);
        if (v > m) m = std::move(v);
      }
    return m;
  }
  return std::nullopt;
}

DualCertificate best_dual(const RieszSeminorm& p, const RieszSeminorm& q, const TensorElement& u) {
  require_shape(p, q, u);
  const std::size_t n = u.rows(), m = u.cols();
  LinearProgram lp(n * m);
  std::vector<Rational> cost(n * m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) cost[i * m + j] = -abs_value(u(i, j));
  lp.set_objective(std::move(cost));
  for (const auto& prod : lifted_products(p, q)) {
    const LatticeElement flat = prod.tensor.flatten();
    lp.add_constraint({flat.coords().begin(), flat.coords().end()}, Sense::LessEqual, Rational(prod.priced ? 1 : 0));
  }
  const LpSolution s = solve(lp);
  if (s.status != LpStatus::Optimal) throw Error("dual program did not reach an optimum");
  return {TensorElement::from_vector(n, m, LatticeElement(s.x))};
}

Decomposition lifted_decomposition(const RieszSeminorm& p, const RieszSeminorm& q, const TensorElement& u) {
  require_shape(p, q, u);
  const std::vector<Product> products = lifted_products(p, q);
  LinearProgram lp(products.size());
  for (std::size_t v = 0; v < products.size(); ++v) lp.set_cost(v, products[v].priced ? 1 : 0);
  for (std::size_t i = 0; i < u.rows(); ++i)
    for (std::size_t j = 0; j < u.cols(); ++j) {
      std::vector<Rational> row(products.size());
      for (std::size_t v = 0; v < products.size(); ++v) row[v] = products[v].tensor(i, j);
      lp.add_constraint(std::move(row), Sense::GreaterEqual, abs_value(u(i, j)));
    }
  const LpSolution s = solve(lp);
  if (s.status != LpStatus::Optimal) throw Error("lifted covering program did not reach an optimum");
  Decomposition d;
  for (std::size_t v = 0; v < products.size(); ++v)
    if (s.x[v] > 0) d.terms.push_back({s.x[v] * products[v].x, products[v].y});
  return d;
}

Decomposition entrywise_decomposition(const TensorElement& u) {
  Decomposition d;
  for (std::size_t i = 0; i < u.rows(); ++i)
    for (std::size_t j = 0; j < u.cols(); ++j)
      if (u(i, j) != 0)
        d.terms.push_back({LatticeElement::unit(u.rows(), i, abs_value(u(i, j))), LatticeElement::unit(u.cols(), j)});
  return d;
}

Decomposition dominating_decomposition(const TensorElement& u) {
  RankOnePair pair = dominating_rank_one(abs(u));
  Decomposition d;
  if (!pair.a.is_zero()) d.terms.push_back({std::move(pair.a), std::move(pair.b)});
  return d;
}

DualCertificate product_form(const LatticeElement& f, const LatticeElement& g) { return {rank_one(f, g)}; }

namespace {

struct Generators {
  std::vector<LatticeElement> all;  // atoms then rays
  std::size_t atoms = 0;
};

Generators generators_of(const RieszSeminorm& p) {
  ConeModel c = p.cone();
  Generators g;
  g.atoms = c.atoms.size();
  g.all = std::move(c.atoms);
  g.all.insert(g.all.end(), c.rays.begin(), c.rays.end());
  return g;
}

// Optimizes the "free" side of every term with the "fixed" side held. With
// `fixed_is_y` the free side lives in p's space and u is read as is; otherwise
// roles swap and u is read transposed.
std::optional<std::vector<LatticeElement>> half_step(const Generators& free_gens, const RieszSeminorm& fixed_norm,
                                                     const std::vector<LatticeElement>& fixed, const TensorElement& u,
                                                     bool fixed_is_y) {
  const std::size_t k = fixed.size();
  const std::size_t g = free_gens.all.size();
  const std::size_t free_dim = fixed_is_y ? u.rows() : u.cols();
  const std::size_t fixed_dim = fixed_is_y ? u.cols() : u.rows();
  LinearProgram lp(k * g);
  for (std::size_t t = 0; t < k; ++t) {
    const Rational weight = fixed[t].is_zero() ? Rational(0) : fixed_norm(fixed[t]);
    for (std::size_t v = 0; v < free_gens.atoms; ++v) lp.set_cost(t * g + v, weight);
  }
  for (std::size_t r = 0; r < free_dim; ++r)
    for (std::size_t c = 0; c < fixed_dim; ++c) {
      const Rational target = abs_value(fixed_is_y ? u(r, c) : u(c, r));
      std::vector<Rational> row(k * g);
      bool any = false;
      for (std::size_t t = 0; t < k; ++t) {
        if (fixed[t][c] == 0) continue;
        for (std::size_t v = 0; v < g; ++v) {
          if (free_gens.all[v][r] == 0) continue;
          row[t * g + v] = free_gens.all[v][r] * fixed[t][c];
          any = true;
        }
      }
      if (!any) {
        if (target > 0) return std::nullopt;
        continue;
      }
      lp.add_constraint(std::move(row), Sense::GreaterEqual, target);
    }
  const LpSolution s = solve(lp);
  if (s.status != LpStatus::Optimal) return std::nullopt;
  std::vector<LatticeElement> out;
  for (std::size_t t = 0; t < k; ++t) {
    LatticeElement x = LatticeElement::zero(free_dim);
    for (std::size_t v = 0; v < g; ++v)
      if (s.x[t * g + v] != 0) x = x + s.x[t * g + v] * free_gens.all[v];
    out.push_back(std::move(x));
  }
  return out;
}

Decomposition assemble(const std::vector<LatticeElement>& xs, const std::vector<LatticeElement>& ys) {
  Decomposition d;
  for (std::size_t t = 0; t < xs.size(); ++t)
    if (!xs[t].is_zero() && !ys[t].is_zero()) d.terms.push_back({xs[t], ys[t]});
  return d;
}

}  // namespace

std::optional<Decomposition> alternating_search(const RieszSeminorm& p, const RieszSeminorm& q, const TensorElement& u,
                                                std::size_t k, CounterRng& rng, std::size_t max_sweeps) {
  require_shape(p, q, u);
  if (k == 0) throw InvalidArgument("alternating_search needs k >= 1");
  const std::size_t n = u.rows(), m = u.cols();
  std::vector<LatticeElement> ys;
  for (std::size_t t = 0; t < k; ++t) {
    std::vector<Rational> y(m);
    for (auto& v : y) v = rng.uniform_int(0, 3);
    ys.emplace_back(std::move(y));
  }
  for (std::size_t c = 0; c < m; ++c) {
    bool needed = false, covered = false;
    for (std::size_t r = 0; r < n; ++r) needed = needed || u(r, c) != 0;
    for (const auto& y : ys) covered = covered || y[c] != 0;
    if (needed && !covered) ys[c % k][c] = 1;
  }
  const Generators gp = generators_of(p), gq = generators_of(q);
  std::optional<Decomposition> best;
  Rational best_value;
  for (std::size_t sweep = 0; sweep < max_sweeps; ++sweep) {
    auto xs = half_step(gp, q, ys, u, true);
    if (!xs) break;
    auto next_ys = half_step(gq, p, *xs, u, false);
    if (!next_ys) break;
    ys = std::move(*next_ys);
    Decomposition d = assemble(*xs, ys);
    Rational v = d.value(p, q);
    if (best && v >= best_value) break;  // stationary
    best_value = std::move(v);
    best = std::move(d);
  }
  return best;
}

SeminormCertificate seminorm_certify(const RieszSeminorm& p, const RieszSeminorm& q, const TensorElement& u,
                                     const SearchBudget& budget) {
  require_shape(p, q, u);
  if (budget.restarts == 0) throw InvalidArgument("restarts must be >= 1");
  if (budget.k_max && *budget.k_max == 0) throw InvalidArgument("k_max must be >= 1");
  const std::size_t k_max = budget.k_max.value_or(u.rows() * u.cols());

  SeminormCertificate cert{Rational(), Rational(), best_dual(p, q, u), {}, {}};
  cert.lower = cert.dual.value(u);

  auto consider = [&](Decomposition d, std::string route) {
    Rational v = d.value(p, q);
    if (cert.upper_route.empty() || v < cert.upper) {
      cert.upper = std::move(v);
      cert.decomposition = std::move(d);
      cert.upper_route = std::move(route);
    }
  };
  consider(entrywise_decomposition(u), "entrywise");
  consider(dominating_decomposition(u), "dominating-rank-one");
  if (budget.exact_program && cert.upper > cert.lower) consider(lifted_decomposition(p, q, u), "lifted-program");

  for (std::size_t k = 1; k <= k_max && cert.upper > cert.lower; ++k) {
    const CounterRng base(budget.seed, k);
    auto runs = parallel_map(budget.restarts, budget.workers, [&](std::size_t r) {
      CounterRng rng = base.split(r);
      return alternating_search(p, q, u, k, rng, budget.max_sweeps);
    });
    for (std::size_t r = 0; r < runs.size(); ++r)
      if (runs[r]) consider(std::move(*runs[r]), "alternating(k=" + std::to_string(k) + ",start=" + std::to_string(r) + ")");
  }

  if (!verify(cert, p, q, u)) throw Error("internal error: certificate failed exact re-verification");
  return cert;
}

std::string to_string(Membership m) {
  switch (m) {
    case Membership::Member:
      return "member";
    case Membership::NonMember:
      return "non-member";
    case Membership::Undecided:
      return "undecided";
  }
  return "?";
}

Membership classify(const SeminormCertificate& cert, const Rational& radius) {
  if (cert.upper <= radius) return Membership::Member;
  if (cert.lower > radius) return Membership::NonMember;
  return Membership::Undecided;
}

}  // namespace fremlin
