#include "fremlin/hulls.hpp"

#include <algorithm>
#include <utility>

#include "fremlin/errors.hpp"

namespace fremlin {

HullForm normalize(const std::vector<Hull>& decoration) {
  HullForm f = HullForm::Points;
  for (Hull h : decoration) {
    switch (f) {
      case HullForm::Points:
        f = h == Hull::Sol ? HullForm::Sol : (h == Hull::Conv ? HullForm::Conv : HullForm::ConvB);
        break;
      case HullForm::Sol:
        if (h != Hull::Sol) f = HullForm::ConvBOfSol;
        break;
      case HullForm::Conv:
        if (h == Hull::Sol) f = HullForm::SolOfConv;
        if (h == Hull::ConvB) f = HullForm::ConvB;
        break;
      case HullForm::ConvB:
        if (h == Hull::Sol) f = HullForm::SolOfConvB;
        break;
      case HullForm::SolOfConv:
      case HullForm::SolOfConvB:
        // Conv_b(Sol(Conv_b G)) == Conv_b(Sol(G)) by Riesz decomposition.
        if (h != Hull::Sol) f = HullForm::ConvBOfSol;
        break;
      case HullForm::ConvBOfSol:
        break;
    }
  }
  return f;
}

std::string to_string(Hull h) {
  switch (h) {
    case Hull::Sol:
      return "Sol";
    case Hull::Conv:
      return "Conv";
    case Hull::ConvB:
      return "Conv_b";
  }
  return "?";
}

std::string to_string(HullForm f) {
  switch (f) {
    case HullForm::Points:
      return "points";
    case HullForm::Sol:
      return "Sol";
    case HullForm::Conv:
      return "Conv";
    case HullForm::ConvB:
      return "Conv_b";
    case HullForm::SolOfConv:
      return "Sol(Conv)";
    case HullForm::SolOfConvB:
      return "Sol(Conv_b)";
    case HullForm::ConvBOfSol:
      return "Conv_b(Sol)";
  }
  return "?";
}

bool Box::contains(const LatticeElement& x) const { return leq(lo, x) && leq(x, hi); }

namespace {


std::vector<Rational> widen(const std::vector<Rational>& coeffs, std::size_t at, std::size_t total) {
  std::vector<Rational> out(total);
  std::copy(coeffs.begin(), coeffs.end(), out.begin() + static_cast<std::ptrdiff_t>(at));
  return out;
}

void append_rows(Piece& target, const Piece& source, std::size_t at) {
  for (const auto& r : source.rows) target.rows.push_back({widen(r.coeffs, at, target.vars), r.sense, r.rhs});
}

Piece empty_piece(std::size_t dim, std::size_t vars) {
  Piece p;
  p.offset.assign(dim, Rational(0));
  p.map.assign(dim, std::vector<Rational>(vars));
  p.vars = vars;
  return p;
}


// Pattern-based join/meet of two general pieces: coordinate i is taken from
// the piece selected by bit i, and the other piece's coordinate must lie
// below (join) or above (meet) it.
Piece lattice_combine(const Piece& a, const Piece& b, unsigned pattern, bool is_join) {
  const std::size_t dim = a.dim();
  Piece p = empty_piece(dim, a.vars + b.vars);
  append_rows(p, a, 0);
  append_rows(p, b, a.vars);
  for (std::size_t i = 0; i < dim; ++i) {
    const bool take_b = (pattern >> i) & 1U;
    const Piece& chosen = take_b ? b : a;
    const Piece& other = take_b ? a : b;
    const std::size_t chosen_at = take_b ? a.vars : 0;
    const std::size_t other_at = take_b ? 0 : a.vars;
    p.offset[i] = chosen.offset[i];
    std::vector<Rational> row(p.vars);
    for (std::size_t j = 0; j < chosen.vars; ++j) {
      p.map[i][chosen_at + j] = chosen.map[i][j];
      row[chosen_at + j] -= chosen.map[i][j];
    }
    for (std::size_t j = 0; j < other.vars; ++j) row[other_at + j] += other.map[i][j];
    p.rows.push_back({std::move(row), is_join ? Sense::LessEqual : Sense::GreaterEqual,
                      chosen.offset[i] - other.offset[i]});
  }
  return p;
}

}  // namespace

Piece Piece::from_box(LatticeElement lo, LatticeElement hi) {
  require_same_dim(lo, hi);
  const std::size_t dim = lo.dim();
  Piece p = empty_piece(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    p.offset[i] = lo[i];
    p.map[i][i] = 1;
    p.rows.push_back({widen({Rational(1)}, i, dim), Sense::LessEqual, hi[i] - lo[i]});
  }
  p.box = Box{std::move(lo), std::move(hi)};
  return p;
}

bool Piece::contains(const LatticeElement& x) const {
  if (x.dim() != dim()) throw DimensionMismatch(dim(), x.dim());
  if (box) return box->contains(x);
  LinearProgram lp(vars);
  for (std::size_t i = 0; i < dim(); ++i) lp.add_constraint(map[i], Sense::Equal, x[i] - offset[i]);
  for (const auto& r : rows) lp.add_constraint(r.coeffs, r.sense, r.rhs);
  return is_feasible(lp);
}

Region::Region(std::size_t dim, std::vector<Piece> pieces) : dim_(dim), pieces_(std::move(pieces)) {
  for (const auto& p : pieces_)
    if (p.dim() != dim_) throw DimensionMismatch(dim_, p.dim());
}

bool Region::contains(const LatticeElement& x) const {
  if (x.dim() != dim_) throw DimensionMismatch(dim_, x.dim());
  // Boxes first: they are free to test.
  for (const auto& p : pieces_)
    if (p.box && p.box->contains(x)) return true;
  for (const auto& p : pieces_)
    if (!p.box && p.contains(x)) return true;
  return false;
}

Region operator+(const Region& a, const Region& b) {
  if (a.dim_ != b.dim_) throw DimensionMismatch(a.dim_, b.dim_);
  std::vector<Piece> out;
  for (const auto& pa : a.pieces_)
    for (const auto& pb : b.pieces_) {
      if (pa.box && pb.box) {
        out.push_back(Piece::from_box(pa.box->lo + pb.box->lo, pa.box->hi + pb.box->hi));
        continue;
      }
      Piece p = empty_piece(a.dim_, pa.vars + pb.vars);
      for (std::size_t i = 0; i < a.dim_; ++i) {
        p.offset[i] = pa.offset[i] + pb.offset[i];
        std::copy(pa.map[i].begin(), pa.map[i].end(), p.map[i].begin());
        std::copy(pb.map[i].begin(), pb.map[i].end(), p.map[i].begin() + static_cast<std::ptrdiff_t>(pa.vars));
      }
      append_rows(p, pa, 0);
      append_rows(p, pb, pa.vars);
      out.push_back(std::move(p));
    }
  return Region(a.dim_, std::move(out));
}

Region operator*(const Rational& alpha, const Region& a) {
  std::vector<Piece> out;
  for (const auto& pa : a.pieces_) {
    if (pa.box) {
      LatticeElement lo = alpha * pa.box->lo, hi = alpha * pa.box->hi;
      if (alpha < 0) std::swap(lo, hi);
      out.push_back(Piece::from_box(std::move(lo), std::move(hi)));
      continue;
    }
    Piece p = pa;
    for (auto& v : p.offset) v *= alpha;
    for (auto& row : p.map)
      for (auto& v : row) v *= alpha;
    out.push_back(std::move(p));
  }
  return Region(a.dim_, std::move(out));
}

Region Region::image(const Matrix& matrix) const {
  const bool hom = is_lattice_homomorphism(matrix);
  const std::size_t target = matrix.size();
  std::vector<Piece> out;
  for (const auto& pa : pieces_) {
    if (pa.box && hom) {
      out.push_back(Piece::from_box(apply(matrix, pa.box->lo), apply(matrix, pa.box->hi)));
      continue;
    }
    Piece p = empty_piece(target, pa.vars);
    for (std::size_t r = 0; r < target; ++r) {
      if (matrix[r].size() != dim_) throw DimensionMismatch(dim_, matrix[r].size());
      for (std::size_t c = 0; c < dim_; ++c) {
        if (matrix[r][c] == 0) continue;
        p.offset[r] += matrix[r][c] * pa.offset[c];
        for (std::size_t j = 0; j < pa.vars; ++j) p.map[r][j] += matrix[r][c] * pa.map[c][j];
      }
    }
    p.rows = pa.rows;
    out.push_back(std::move(p));
  }
  return Region(target, std::move(out));
}

Region Region::unite(const Region& other) const {
  if (dim_ != other.dim_) throw DimensionMismatch(dim_, other.dim_);
  std::vector<Piece> out = pieces_;
  out.insert(out.end(), other.pieces_.begin(), other.pieces_.end());
  return Region(dim_, std::move(out));
}

Region Region::intersect(const Region& other) const {
  if (dim_ != other.dim_) throw DimensionMismatch(dim_, other.dim_);
  std::vector<Piece> out;
  for (const auto& pa : pieces_)
    for (const auto& pb : other.pieces_) {
      if (pa.box && pb.box) {
        LatticeElement lo = fremlin::join(pa.box->lo, pb.box->lo), hi = fremlin::meet(pa.box->hi, pb.box->hi);
        if (leq(lo, hi)) out.push_back(Piece::from_box(std::move(lo), std::move(hi)));
        continue;
      }
      Piece p = empty_piece(dim_, pa.vars + pb.vars);
      for (std::size_t i = 0; i < dim_; ++i) {
        p.offset[i] = pa.offset[i];
        std::copy(pa.map[i].begin(), pa.map[i].end(), p.map[i].begin());
        std::vector<Rational> row(p.vars);
        for (std::size_t j = 0; j < pa.vars; ++j) row[j] = pa.map[i][j];
        for (std::size_t j = 0; j < pb.vars; ++j) row[pa.vars + j] = -pb.map[i][j];
        p.rows.push_back({std::move(row), Sense::Equal, pb.offset[i] - pa.offset[i]});
      }
      append_rows(p, pa, 0);
      append_rows(p, pb, pa.vars);
      out.push_back(std::move(p));
    }
  return Region(dim_, std::move(out));
}

Region Region::join(const Region& other) const {
  if (dim_ != other.dim_) throw DimensionMismatch(dim_, other.dim_);
  std::vector<Piece> out;
  for (const auto& pa : pieces_)
    for (const auto& pb : other.pieces_) {
      if (pa.box && pb.box) {
        out.push_back(Piece::from_box(fremlin::join(pa.box->lo, pb.box->lo), fremlin::join(pa.box->hi, pb.box->hi)));
        continue;
      }
      for (unsigned pattern = 0; pattern < (1U << dim_); ++pattern) out.push_back(lattice_combine(pa, pb, pattern, true));
    }
  return Region(dim_, std::move(out));
}

Region Region::meet(const Region& other) const {
  if (dim_ != other.dim_) throw DimensionMismatch(dim_, other.dim_);
  std::vector<Piece> out;
  for (const auto& pa : pieces_)
    for (const auto& pb : other.pieces_) {
      if (pa.box && pb.box) {
        out.push_back(Piece::from_box(fremlin::meet(pa.box->lo, pb.box->lo), fremlin::meet(pa.box->hi, pb.box->hi)));
        continue;
      }
      for (unsigned pattern = 0; pattern < (1U << dim_); ++pattern) out.push_back(lattice_combine(pa, pb, pattern, false));
    }
  return Region(dim_, std::move(out));
}

GeneratedSet::GeneratedSet(std::vector<LatticeElement> generators, std::vector<Hull> decoration)
    : generators_(std::move(generators)), decoration_(std::move(decoration)), form_(normalize(decoration_)) {
  if (generators_.empty()) throw InvalidArgument("generated set needs at least one generator");
  for (const auto& g : generators_) require_same_dim(generators_.front(), g);
}

bool GeneratedSet::is_convex_solid() const noexcept {
  return form_ == HullForm::ConvBOfSol || (form_ == HullForm::Sol && generators_.size() == 1);
}

Region GeneratedSet::region() const {
  const std::size_t n = dim();
  const std::size_t k = generators_.size();
  std::vector<Piece> pieces;
  auto generator_columns = [&](Piece& p, std::size_t at, const Rational& sign) {
    for (std::size_t g = 0; g < k; ++g)
      for (std::size_t i = 0; i < n; ++i) p.map[i][at + g] = sign * generators_[g][i];
  };
  // Sol(Y) with Y = G lambda: z = t+ - t-, t+_i + t-_i <= s_i * y_i.
  auto solid_over = [&](std::size_t lambda_vars, unsigned signs, bool balanced) {
    Piece p = empty_piece(n, lambda_vars + 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      p.map[i][lambda_vars + i] = 1;
      p.map[i][lambda_vars + n + i] = -1;
      const Rational s = ((signs >> i) & 1U) ? -1 : 1;
      std::vector<Rational> row(p.vars);
      row[lambda_vars + i] = 1;
      row[lambda_vars + n + i] = 1;
      for (std::size_t g = 0; g < k; ++g) {
        row[g] -= s * generators_[g][i];
        if (balanced) row[k + g] += s * generators_[g][i];
      }
      p.rows.push_back({std::move(row), Sense::LessEqual, Rational(0)});
    }
    std::vector<Rational> total(p.vars);
    for (std::size_t v = 0; v < lambda_vars; ++v) total[v] = 1;
    p.rows.push_back({std::move(total), balanced ? Sense::LessEqual : Sense::Equal, Rational(1)});
    return p;
  };

  switch (form_) {
    case HullForm::Points:
      for (const auto& g : generators_) pieces.push_back(Piece::from_box(g, g));
      break;
    case HullForm::Sol:
      for (const auto& g : generators_) pieces.push_back(Piece::from_box(-abs(g), abs(g)));
      break;
    case HullForm::Conv: {
      Piece p = empty_piece(n, k);
      generator_columns(p, 0, 1);
      p.rows.push_back({std::vector<Rational>(k, Rational(1)), Sense::Equal, Rational(1)});
      pieces.push_back(std::move(p));
      break;
    }
    case HullForm::ConvB: {
      Piece p = empty_piece(n, 2 * k);
      generator_columns(p, 0, 1);
      generator_columns(p, k, -1);
      p.rows.push_back({std::vector<Rational>(2 * k, Rational(1)), Sense::LessEqual, Rational(1)});
      pieces.push_back(std::move(p));
      break;
    }
    case HullForm::ConvBOfSol: {
      Piece p = empty_piece(n, k + 2 * n);
      for (std::size_t i = 0; i < n; ++i) {
        p.map[i][k + i] = 1;
        p.map[i][k + n + i] = -1;
        std::vector<Rational> row(p.vars);
        row[k + i] = 1;
        row[k + n + i] = 1;
        for (std::size_t g = 0; g < k; ++g) row[g] = -abs_value(generators_[g][i]);
        p.rows.push_back({std::move(row), Sense::LessEqual, Rational(0)});
      }
      std::vector<Rational> total(p.vars);
      for (std::size_t g = 0; g < k; ++g) total[g] = 1;
      p.rows.push_back({std::move(total), Sense::LessEqual, Rational(1)});
      pieces.push_back(std::move(p));
      break;
    }
    case HullForm::SolOfConv:
      for (unsigned s = 0; s < (1U << n); ++s) pieces.push_back(solid_over(k, s, false));
      break;
    case HullForm::SolOfConvB:
      // Balanced: sign patterns s and -s describe the same piece.
      for (unsigned s = 0; s < (1U << (n - 1)); ++s) pieces.push_back(solid_over(2 * k, s, true));
      break;
  }
  return Region(n, std::move(pieces));
}

namespace {

std::vector<Rational> simplex_weights(CounterRng& rng, std::size_t k) {
  std::vector<std::int64_t> raw(k);
  std::int64_t total = 0;
  for (auto& r : raw) total += (r = rng.uniform_int(0, 4));
  if (total == 0) {
    raw[static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(k) - 1))] = 1;
    total = 1;
  }
  std::vector<Rational> w(k);
  for (std::size_t i = 0; i < k; ++i) w[i] = ratio(raw[i], total);
  return w;
}

std::vector<Rational> ball_weights(CounterRng& rng, std::size_t k) {
  std::vector<std::int64_t> raw(k);
  std::int64_t total = rng.uniform_int(0, 2);
  for (auto& r : raw) total += std::abs(r = rng.uniform_int(-4, 4));
  std::vector<Rational> w(k);
  if (total == 0) return w;
  for (std::size_t i = 0; i < k; ++i) w[i] = ratio(raw[i], total);
  return w;
}

LatticeElement sample_box(CounterRng& rng, const LatticeElement& bound) {
  std::vector<Rational> c(bound.dim());
  for (std::size_t i = 0; i < bound.dim(); ++i) {
    const Rational b = abs_value(bound[i]);
    c[i] = rng.uniform_rational(-b, b);
  }
  return LatticeElement(std::move(c));
}

LatticeElement combine(const std::vector<LatticeElement>& points, const std::vector<Rational>& w) {
  LatticeElement out = LatticeElement::zero(points.front().dim());
  for (std::size_t i = 0; i < points.size(); ++i)
    if (w[i] != 0) out = out + w[i] * points[i];
  return out;
}

}  // namespace

LatticeElement GeneratedSet::sample(CounterRng& rng) const {
  const std::size_t k = generators_.size();
  auto pick = [&]() -> const LatticeElement& {
    return generators_[static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(k) - 1))];
  };
  switch (form_) {
    case HullForm::Points:
      return pick();
    case HullForm::Sol:
      return sample_box(rng, pick());
    case HullForm::Conv:
      return combine(generators_, simplex_weights(rng, k));
    case HullForm::ConvB:
      return combine(generators_, ball_weights(rng, k));
    case HullForm::ConvBOfSol: {
      std::vector<LatticeElement> pts;
      for (const auto& g : generators_) pts.push_back(sample_box(rng, g));
      return combine(pts, ball_weights(rng, k));
    }
    case HullForm::SolOfConv:
      return sample_box(rng, combine(generators_, simplex_weights(rng, k)));
    case HullForm::SolOfConvB:
      return sample_box(rng, combine(generators_, ball_weights(rng, k)));
  }
  return pick();
}

bool member(const GeneratedSet& set, const LatticeElement& x) {
  if (x.dim() != set.dim()) throw DimensionMismatch(set.dim(), x.dim());
  switch (set.form()) {
    case HullForm::Points:
      return std::find(set.generators().begin(), set.generators().end(), x) != set.generators().end();
    case HullForm::Sol: {
      const LatticeElement ax = abs(x);
      for (const auto& g : set.generators())
        if (leq(ax, abs(g))) return true;
      return false;
    }
    case HullForm::ConvBOfSol: {
      const GaugeResult r = gauge(set, x);
      return r.finite() && *r.value <= 1;
    }
    default:
      return set.region().contains(x);
  }
}

GaugeResult gauge(const GeneratedSet& set, const LatticeElement& x) {
  if (x.dim() != set.dim()) throw DimensionMismatch(set.dim(), x.dim());
  const auto& gens = set.generators();
  const std::size_t k = gens.size(), n = set.dim();
  GaugeResult out;
  if (set.form() == HullForm::ConvBOfSol) {
    // Covering program: |x_i| <= sum_k lambda_k |g_k,i|.
    LinearProgram lp(k);
    lp.set_objective(std::vector<Rational>(k, Rational(1)));
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Rational> row(k);
      for (std::size_t g = 0; g < k; ++g) row[g] = abs_value(gens[g][i]);
      lp.add_constraint(std::move(row), Sense::GreaterEqual, abs_value(x[i]));
    }
    const LpSolution s = solve(lp);
    if (s.status != LpStatus::Optimal) return out;
    out.value = s.objective;
    out.weights = s.x;
    return out;
  }
  if (set.form() == HullForm::ConvB) {
    LinearProgram lp(2 * k);
    lp.set_objective(std::vector<Rational>(2 * k, Rational(1)));
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Rational> row(2 * k);
      for (std::size_t g = 0; g < k; ++g) {
        row[g] = gens[g][i];
        row[k + g] = -gens[g][i];
      }
      lp.add_constraint(std::move(row), Sense::Equal, x[i]);
    }
    const LpSolution s = solve(lp);
    if (s.status != LpStatus::Optimal) return out;
    out.value = s.objective;
    out.weights.resize(k);
    for (std::size_t g = 0; g < k; ++g) out.weights[g] = s.x[g] - s.x[k + g];
    return out;
  }
  throw InvalidArgument("gauge requires a convex balanced decoration, got " + to_string(set.form()));
}

namespace {

void require_undecorated(const GeneratedSet& a, const GeneratedSet& b) {
  if (!a.is_undecorated() || !b.is_undecorated())
    throw InvalidArgument("generator-level set algebra needs undecorated operands");
  if (a.dim() != b.dim()) throw DimensionMismatch(a.dim(), b.dim());
}

template <class F>
GeneratedSet pairwise(const GeneratedSet& a, const GeneratedSet& b, F f) {
  require_undecorated(a, b);
  std::vector<LatticeElement> out;
  for (const auto& x : a.generators())
    for (const auto& y : b.generators()) out.push_back(f(x, y));
  return GeneratedSet(std::move(out));
}

}  // namespace

GeneratedSet sum_of(const GeneratedSet& a, const GeneratedSet& b) {
  return pairwise(a, b, [](const LatticeElement& x, const LatticeElement& y) { return x + y; });
}

GeneratedSet join_of(const GeneratedSet& a, const GeneratedSet& b) {
  return pairwise(a, b, [](const LatticeElement& x, const LatticeElement& y) { return join(x, y); });
}

GeneratedSet meet_of(const GeneratedSet& a, const GeneratedSet& b) {
  return pairwise(a, b, [](const LatticeElement& x, const LatticeElement& y) { return meet(x, y); });
}

GeneratedSet union_of(const GeneratedSet& a, const GeneratedSet& b) {
  require_undecorated(a, b);
  std::vector<LatticeElement> out = a.generators();
  for (const auto& y : b.generators())
    if (std::find(out.begin(), out.end(), y) == out.end()) out.push_back(y);
  return GeneratedSet(std::move(out));
}

std::optional<GeneratedSet> intersection_of(const GeneratedSet& a, const GeneratedSet& b) {
  require_undecorated(a, b);
  std::vector<LatticeElement> out;
  for (const auto& x : a.generators())
    if (std::find(b.generators().begin(), b.generators().end(), x) != b.generators().end() &&
        std::find(out.begin(), out.end(), x) == out.end())
      out.push_back(x);
  if (out.empty()) return std::nullopt;
  return GeneratedSet(std::move(out));
}

GeneratedSet scaled(const Rational& alpha, const GeneratedSet& a) {
  std::vector<LatticeElement> out;
  for (const auto& g : a.generators()) out.push_back(alpha * g);
  return GeneratedSet(std::move(out), a.decoration());
}

Region intersect_probe(const GeneratedSet& a, const GeneratedSet& b) { return a.region().intersect(b.region()); }

}  // namespace fremlin
