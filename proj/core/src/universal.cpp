#include "fremlin/universal.hpp"

#include <functional>
#include <tuple>

#include "fremlin/errors.hpp"
#include "fremlin/lp.hpp"
#include "fremlin/neighborhood.hpp"
#include "fremlin/projective.hpp"
#include "fremlin/sampling.hpp"

namespace fremlin {

namespace {

SampleOutcome outcome(bool ok, const std::function<std::string()>& witness) {
  return {true, ok, ok ? std::string() : witness()};
}

Report make_report(std::string suite, std::initializer_list<std::tuple<const char*, const char*, Expectation>> lines) {
  Report r{std::move(suite), {}};
  for (const auto& [id, statement, e] : lines) r.lines.push_back({id, statement, e, 0, 0, {}, {}});
  return r;
}

std::vector<CheckLine*> all_lines(Report& r) {
  std::vector<CheckLine*> out;
  for (auto& l : r.lines) out.push_back(&l);
  return out;
}

}  // namespace

LatticeBimorphism::LatticeBimorphism(std::size_t target_dim, std::vector<std::vector<LatticeElement>> images, bool check)
    : target_dim_(target_dim), images_(std::move(images)) {
  if (target_dim_ == 0) throw InvalidArgument("target dimension must be >= 1");
  if (images_.empty() || images_.front().empty()) throw InvalidArgument("bimorphism needs at least one atom image");
  for (const auto& row : images_) {
    if (row.size() != images_.front().size()) throw DimensionMismatch(images_.front().size(), row.size());
    for (const auto& v : row)
      if (v.dim() != target_dim_) throw DimensionMismatch(target_dim_, v.dim());
  }
  if (!check) return;
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j)
      if (!images_[i][j].is_nonnegative())
        throw InvalidArgument("image (" + std::to_string(i) + ", " + std::to_string(j) + ") is not positive");
  if (!is_lattice_bimorphism()) throw InvalidArgument("atom images are not pairwise disjoint");
}

LatticeBimorphism::LatticeBimorphism(std::size_t target_dim, std::vector<std::vector<LatticeElement>> images)
    : LatticeBimorphism(target_dim, std::move(images), true) {}

LatticeBimorphism LatticeBimorphism::unchecked(std::size_t target_dim, std::vector<std::vector<LatticeElement>> images) {
  return LatticeBimorphism(target_dim, std::move(images), false);
}

LatticeBimorphism LatticeBimorphism::canonical(std::size_t n, std::size_t m) {
  std::vector<std::vector<LatticeElement>> images(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) images[i].push_back(LatticeElement::unit(n * m, i * m + j));
  return LatticeBimorphism(n * m, std::move(images));
}

bool LatticeBimorphism::is_lattice_bimorphism() const {
  for (std::size_t t = 0; t < target_dim_; ++t) {
    std::size_t owners = 0;
    for (const auto& row : images_)
      for (const auto& v : row) {
        if (v[t] < 0) return false;
        if (v[t] != 0) ++owners;
      }
    if (owners > 1) return false;
  }
  return true;
}

LatticeBimorphism LatticeBimorphism::scaled(const Rational& lambda) const {
  std::vector<std::vector<LatticeElement>> images = images_;
  for (auto& row : images)
    for (auto& v : row) v = lambda * v;
  return LatticeBimorphism(target_dim_, std::move(images), lambda >= 0);
}

LatticeElement bimorphism_eval(const LatticeBimorphism& phi, const LatticeElement& x, const LatticeElement& y) {
  if (x.dim() != phi.rows()) throw DimensionMismatch(phi.rows(), x.dim());
  if (y.dim() != phi.cols()) throw DimensionMismatch(phi.cols(), y.dim());
  LatticeElement out = LatticeElement::zero(phi.target_dim());
  for (std::size_t i = 0; i < phi.rows(); ++i)
    for (std::size_t j = 0; j < phi.cols(); ++j)
      if (x[i] != 0 && y[j] != 0) out = out + (x[i] * y[j]) * phi.image(i, j);
  return out;
}

LatticeElement InducedHom::operator()(const TensorElement& u) const {
  if (u.rows() != phi_.rows()) throw DimensionMismatch(phi_.rows(), u.rows());
  if (u.cols() != phi_.cols()) throw DimensionMismatch(phi_.cols(), u.cols());
  LatticeElement out = LatticeElement::zero(phi_.target_dim());
  for (std::size_t i = 0; i < u.rows(); ++i)
    for (std::size_t j = 0; j < u.cols(); ++j)
      if (u(i, j) != 0) out = out + u(i, j) * phi_.image(i, j);
  return out;
}

Matrix InducedHom::matrix() const {
  const std::size_t m = phi_.cols();
  Matrix a(phi_.target_dim(), std::vector<Rational>(phi_.rows() * m));
  for (std::size_t i = 0; i < phi_.rows(); ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t t = 0; t < phi_.target_dim(); ++t) a[t][i * m + j] = phi_.image(i, j)[t];
  return a;
}

InducedHom induce_hom(const LatticeBimorphism& phi) {
  if (!phi.is_lattice_bimorphism()) throw InvalidArgument("atom images must be positive and pairwise disjoint");
  return InducedHom(phi);
}

LatticeBimorphism random_bimorphism(CounterRng& rng, std::size_t n, std::size_t m, std::size_t g) {
  std::vector<std::vector<Rational>> coords(n * m, std::vector<Rational>(g));
  for (std::size_t t = 0; t < g; ++t) {
    const auto owner = static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(n * m)));
    if (owner < n * m) coords[owner][t] = rng.uniform_int(1, 3);
  }
  std::vector<std::vector<LatticeElement>> images(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) images[i].emplace_back(coords[i * m + j]);
  return LatticeBimorphism(g, std::move(images));
}

std::optional<Rational> continuity_constant(const InducedHom& T, const RieszSeminorm& p, const RieszSeminorm& q,
                                            const RieszSeminorm& r) {
  const LatticeBimorphism& phi = T.bimorphism();
  if (p.dim() != phi.rows()) throw DimensionMismatch(phi.rows(), p.dim());
  if (q.dim() != phi.cols()) throw DimensionMismatch(phi.cols(), q.dim());
  if (r.dim() != phi.target_dim()) throw DimensionMismatch(phi.target_dim(), r.dim());
  const ConeModel cp = p.cone(), cq = q.cone();
  for (const auto& d : cp.rays)
    for (const auto* side : {&cq.atoms, &cq.rays})
      for (const auto& b : *side)
        if (r(T(rank_one(d, b))) != 0) return std::nullopt;
  for (const auto& a : cp.atoms)
    for (const auto& e : cq.rays)
      if (r(T(rank_one(a, e))) != 0) return std::nullopt;
  Rational c;
  for (const auto& a : cp.atoms)
    for (const auto& b : cq.atoms) c = max_value(c, r(T(rank_one(a, b))));
  return c;
}

ContinuityResult continuity_certificate(const InducedHom& T, const RieszSeminorm& p, const RieszSeminorm& q,
                                        const RieszSeminorm& r, std::size_t samples, std::uint64_t seed,
                                        std::size_t workers) {
  ContinuityResult result{continuity_constant(T, p, q, r),
                          make_report("continuity",
                                      {{"continuity/bound", "r(T u) <= C upper(u) for the certified upper bound",
                                        Expectation::Holds},
                                       {"continuity/image-chain", "T(W(U, V)) is contained in Conv_b(Sol(T(U (x) V)))",
                                        Expectation::Holds},
                                       {"continuity/solid-image", "T(Sol(U (x) V)) is contained in Sol(T(U (x) V))",
                                        Expectation::Holds},
                                       {"continuity/unit-ball", "r(T w) <= C on W(U, V)", Expectation::Holds}})};
  Report& report = result.report;
  const auto C = result.constant;
  report.lines[0].note = C ? "C = " + to_string(*C) : "C is infinite";
  const auto bp = p.unit_ball(), bq = q.unit_ball();
  std::optional<TensorNbhd> W;
  std::optional<GeneratedSet> target;
  std::vector<TensorElement> products;
  if (bp && bq) {
    W.emplace(*bp, *bq);
    products = W->product_generators();
    std::vector<LatticeElement> images;
    for (const auto& P : products) images.push_back(T(P));
    target.emplace(images, std::vector<Hull>{Hull::Sol, Hull::ConvB});
  } else {
    for (std::size_t l = 1; l < report.lines.size(); ++l) report.lines[l].note = "skipped: unbounded unit ball";
  }
  const std::size_t n = p.dim(), m = q.dim();
  const CounterRng base(seed, 0x636f6e);
  run_sampled(all_lines(report), samples, workers, [&](std::size_t s) {
    CounterRng rng = base.split(s);
    std::vector<SampleOutcome> out;
    const TensorElement u = random_tensor(rng, n, m, 4, 2);
    if (C) {
      const SeminormCertificate cert = seminorm_certify(p, q, u);
      const Rational lhs = r(T(u));
      out.push_back(outcome(lhs <= *C * cert.upper, [&] {
        return "u = " + to_string(u) + ", r(Tu) = " + to_string(lhs) + ", upper = " + to_string(cert.upper);
      }));
    } else {
      out.push_back({false, true, {}});
    }
    if (!W) {
      for (int l = 0; l < 3; ++l) out.push_back({false, true, {}});
      return out;
    }
    const TensorElement w = sample_nbhd(*W, rng).z;
    const LatticeElement Tw = T(w);
    out.push_back(outcome(member(*target, Tw), [&] { return "w = " + to_string(w); }));

    const std::size_t k = static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(products.size()) - 1));
    TensorElement below(n, m);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < m; ++j) below(i, j) = products[k](i, j) * rng.uniform_rational(-1, 1, 4);
    const LatticeElement Tb = T(below), Tp = T(products[k]);
    const GeneratedSet sol(target->generators(), {Hull::Sol});
    out.push_back(outcome(leq(abs(Tb), abs(Tp)) && member(sol, Tb), [&] { return "u = " + to_string(below); }));

    if (C)
      out.push_back(outcome(r(Tw) <= *C, [&] { return "w = " + to_string(w) + ", r(Tw) = " + to_string(r(Tw)); }));
    else
      out.push_back({false, true, {}});
    return out;
  });
  return result;
}

Report universal_property_check(const LatticeBimorphism& phi, std::size_t samples, std::uint64_t seed,
                                std::size_t workers) {
  Report report = make_report(
      "universal-property",
      {{"universal/factorization", "T(x (x) y) = Phi(x, y)", Expectation::Holds},
       {"universal/slot-homomorphism", "Phi(x v x', y) = Phi(x, y) v Phi(x', y) and Phi(y, .) likewise for y >= 0",
        Expectation::Holds},
       {"universal/lattice-homomorphism", "T(u v v) = T(u) v T(v) and T(|u|) = |T(u)|", Expectation::Holds},
       {"universal/uniqueness", "the values on rank-one elements determine T", Expectation::Holds},
       {"universal/broken-fixture", "T is a lattice homomorphism for images that overlap", Expectation::Refuted},
       {"universal/invariant-rejects-broken", "overlapping images are rejected by the checked constructor",
        Expectation::Holds}});
  const InducedHom T = induce_hom(phi);
  const Matrix expected = T.matrix();
  const std::size_t n = phi.rows(), m = phi.cols();
  const CounterRng base(seed, 0x756e69);

  std::vector<CheckLine*> first{&report.lines[0], &report.lines[1], &report.lines[2], &report.lines[3]};
  run_sampled(first, samples, workers, [&](std::size_t s) {
    CounterRng rng = base.split(s);
    std::vector<SampleOutcome> out;
    const LatticeElement x = random_element(rng, n, 4, 2), y = random_element(rng, m, 4, 2);
    out.push_back(outcome(T(rank_one(x, y)) == bimorphism_eval(phi, x, y),
                          [&] { return "x = " + to_string(x) + ", y = " + to_string(y); }));

    const LatticeElement x2 = random_element(rng, n, 4, 2), y2 = random_element(rng, m, 4, 2);
    const LatticeElement yp = abs(y), xp = abs(x2);
    const bool slot = bimorphism_eval(phi, join(x, x2), yp) == join(bimorphism_eval(phi, x, yp), bimorphism_eval(phi, x2, yp)) &&
                      bimorphism_eval(phi, xp, join(y, y2)) == join(bimorphism_eval(phi, xp, y), bimorphism_eval(phi, xp, y2));
    out.push_back(outcome(slot, [&] { return "x = " + to_string(x) + ", x' = " + to_string(x2) + ", y = " + to_string(y); }));

    const TensorElement u = random_tensor(rng, n, m, 4, 2), v = random_tensor(rng, n, m, 4, 2);
    out.push_back(outcome(T(join(u, v)) == join(T(u), T(v)) && T(abs(u)) == abs(T(u)),
                          [&] { return "u = " + to_string(u) + ", v = " + to_string(v); }));

    // Recover T from its values on n*m + 2 random rank-one elements.
    Matrix rows;
    std::vector<LatticeElement> values;
    for (std::size_t k = 0; k < n * m + 2; ++k) {
      const LatticeElement a = random_element(rng, n, 3), b = random_element(rng, m, 3);
      const LatticeElement flat = rank_one(a, b).flatten();
      rows.emplace_back(flat.coords().begin(), flat.coords().end());
      values.push_back(bimorphism_eval(phi, a, b));
    }
    bool unique = true, agrees = true;
    for (std::size_t t = 0; t < phi.target_dim() && unique && agrees; ++t) {
      std::vector<Rational> b(values.size());
      for (std::size_t k = 0; k < values.size(); ++k) b[k] = values[k][t];
      const auto sol = solve_linear_system(rows, std::move(b));
      unique = sol.has_value();
      agrees = unique && *sol == expected[t];
    }
    if (!unique)
      out.push_back({false, true, {}});  // the random rank-one family did not span
    else
      out.push_back(outcome(agrees, [] { return std::string("reconstruction differs from T"); }));
    return out;
  });

  const std::vector<std::vector<LatticeElement>> overlapping{{LatticeElement{1}}, {LatticeElement{1}}};
  const InducedHom broken(LatticeBimorphism::unchecked(1, overlapping));
  for (std::size_t s = 0; s < std::max<std::size_t>(samples / 10, 1); ++s) {
    CounterRng rng = base.split(samples + s);
    const TensorElement u = random_tensor(rng, 2, 1, 3), v = random_tensor(rng, 2, 1, 3);
    report.lines[4].check(broken(join(u, v)) == join(broken(u), broken(v)) && broken(abs(u)) == abs(broken(u)),
                          [&] { return "images (1), (1); u = " + to_string(u) + ", v = " + to_string(v); });
  }
  bool rejected = false;
  try {
    LatticeBimorphism(1, overlapping);
  } catch (const InvalidArgument&) {
    rejected = true;
  }
  bool hom_rejected = false;
  try {
    induce_hom(broken.bimorphism());
  } catch (const InvalidArgument&) {
    hom_rejected = true;
  }
  report.lines[5].check(rejected && hom_rejected, [] { return std::string("overlapping images were accepted"); });
  return report;
}

}  // namespace fremlin
