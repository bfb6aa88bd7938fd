#include "fremlin/neighborhood.hpp"

#include <algorithm>

#include "fremlin/errors.hpp"

namespace fremlin {

namespace {

RieszSeminorm gauge_or_throw(const GeneratedSet& s, const char* name) {
  if (!s.is_convex_solid())
    throw InvalidArgument(std::string(name) + " must be convex-solid, got " + to_string(s.form()));
  return RieszSeminorm::gauge_of(s);
}

SampleOutcome outcome(bool ok, std::string witness) { return {true, ok, ok ? std::string() : std::move(witness)}; }

bool certified_member(const TensorNbhd& W, const TensorElement& u) {
  return nbhd_member(W, u) == Membership::Member;
}

}  // namespace

TensorNbhd::TensorNbhd(GeneratedSet U, GeneratedSet V)
    : U_(std::move(U)), V_(std::move(V)), p_(gauge_or_throw(U_, "U")), q_(gauge_or_throw(V_, "V")) {}

TensorNbhd TensorNbhd::from_seminorms(const RieszSeminorm& p, const RieszSeminorm& q) {
  auto bp = p.unit_ball();
  auto bq = q.unit_ball();
  if (!bp || !bq) throw InvalidArgument("unit ball is unbounded; the seminorm has zero-cost directions");
  return TensorNbhd(std::move(*bp), std::move(*bq));
}

std::vector<TensorElement> TensorNbhd::product_generators() const {
  std::vector<TensorElement> out;
  for (const auto& g : U_.generators())
    for (const auto& h : V_.generators()) out.push_back(rank_one(abs(g), abs(h)));
  return out;
}

GeneratedSet TensorNbhd::hull() const {
  std::vector<LatticeElement> flat;
  for (const auto& t : product_generators()) flat.push_back(t.flatten());
  return GeneratedSet(std::move(flat), {Hull::Sol, Hull::ConvB});
}

TensorNbhd TensorNbhd::scaled(const Rational& alpha, const Rational& beta) const {
  return TensorNbhd(fremlin::scaled(alpha, U_), fremlin::scaled(beta, V_));
}

Membership nbhd_member(const TensorNbhd& W, const TensorElement& u, const Rational& radius,
                       const SearchBudget& budget) {
  if (u.rows() != W.rows()) throw DimensionMismatch(W.rows(), u.rows());
  if (u.cols() != W.cols()) throw DimensionMismatch(W.cols(), u.cols());
  if (radius < 0) throw InvalidArgument("radius must be nonnegative");
  return classify(seminorm_certify(W.p(), W.q(), u, budget), radius);
}

GaugeResult hull_gauge(const TensorNbhd& W, const TensorElement& u) {
  if (u.rows() != W.rows()) throw DimensionMismatch(W.rows(), u.rows());
  if (u.cols() != W.cols()) throw DimensionMismatch(W.cols(), u.cols());
  return gauge(W.hull(), u.flatten());
}

NbhdSample sample_nbhd(const TensorNbhd& W, CounterRng& rng, const Rational& shrink) {
  NbhdSample s{TensorElement(W.rows(), W.cols()), {}, {}, {}, {}};
  const auto terms = static_cast<std::size_t>(rng.uniform_int(1, 3));
  std::vector<std::int64_t> k(terms);
  std::int64_t total = 0;
  for (auto& v : k) {
    v = rng.uniform_int(-4, 4);
    total += v < 0 ? -v : v;
  }
  const std::int64_t denom = std::max<std::int64_t>(total, 1) + rng.uniform_int(0, 2);
  for (std::size_t i = 0; i < terms; ++i) {
    LatticeElement x = shrink * W.U().sample(rng);
    LatticeElement y = shrink * W.V().sample(rng);
    const TensorElement bound = rank_one(abs(x), abs(y));
    TensorElement zi(W.rows(), W.cols());
    for (std::size_t r = 0; r < W.rows(); ++r)
      for (std::size_t c = 0; c < W.cols(); ++c) zi(r, c) = bound(r, c) * rng.uniform_rational(-1, 1, 4);
    s.lambda.push_back(ratio(k[i], denom));
    s.z = s.z + s.lambda.back() * zi;
    s.parts.push_back(std::move(zi));
    s.xs.push_back(std::move(x));
    s.ys.push_back(std::move(y));
  }
  return s;
}

namespace {

// Generators of a scaled down copy of `a` that lies inside `other` as well.
GeneratedSet shrink_into(const GeneratedSet& a, const RieszSeminorm& pa, const GeneratedSet& b,
                         const RieszSeminorm& pb) {
  std::vector<LatticeElement> gens;
  auto add = [&](const GeneratedSet& s, const RieszSeminorm& other) {
    for (const auto& g : s.generators()) {
      const Rational v = other(g);
      gens.push_back(v > 1 ? Rational(1) / v * g : g);
    }
  };
  add(a, pb);
  add(b, pa);
  return GeneratedSet(std::move(gens), {Hull::Sol, Hull::ConvB});
}

}  // namespace

Report base_axiom_check(const TensorNbhd& W1, const TensorNbhd& W2, std::uint64_t seed, std::size_t samples,
                        std::size_t workers) {
  if (W1.rows() != W2.rows()) throw DimensionMismatch(W1.rows(), W2.rows());
  if (W1.cols() != W2.cols()) throw DimensionMismatch(W1.cols(), W2.cols());

  Report report{"neighborhood-base", {}};
  auto line = [&](std::string id, std::string statement, Expectation e = Expectation::Holds) {
    report.lines.push_back({std::move(id), std::move(statement), e, 0, 0, {}, {}});
  };
  line("base-axiom/intersection-generators", "shrunken generators lie in U1 ^ U2 and V1 ^ V2");
  line("base-axiom/intersection", "W(U0, V0) is contained in W(U1, V1) and in W(U2, V2)");
  line("base-axiom/additivity", "W(U/2, V) + W(U/2, V) is contained in W(U, V)");
  line("base-axiom/balancedness", "lambda W is contained in W for |lambda| <= 1, and -W = W");
  line("base-axiom/absorption", "z + W((1-s)U, (1-t)V) is contained in W for z built from x_i, y_i with p(x_i) <= s, q(y_i) <= t");
  line("base-axiom/absorption-domination",
       "|z_i + w_j| <= (|x_i| + |u_j|) (x) (|y_i| + |v_j|) with |x_i| + |u_j| in U and |y_i| + |v_j| in V");
  line("base-axiom/absorption-regrouping", "z + w = sum_ij lambda_i gamma_j (z_i + w_j)", Expectation::Informational);
  line("neighborhood/solidity", "u certified in W and |v| <= |u| never certifies v outside W");
  report.lines[6].note =
      "the regrouping needs sum_i lambda_i = sum_j gamma_j = 1; the inclusion itself is checked by the absorption line";

  const GeneratedSet U0 = shrink_into(W1.U(), W1.p(), W2.U(), W2.p());
  const GeneratedSet V0 = shrink_into(W1.V(), W1.q(), W2.V(), W2.q());
  const TensorNbhd W0(U0, V0);
  for (const auto& g : U0.generators())
    report.lines[0].check(W1.p()(g) <= 1 && W2.p()(g) <= 1, [&] { return "U0 generator " + to_string(g); });
  for (const auto& h : V0.generators())
    report.lines[0].check(W1.q()(h) <= 1 && W2.q()(h) <= 1, [&] { return "V0 generator " + to_string(h); });

  const TensorNbhd half = W1.scaled(ratio(1, 2), Rational(1));
  const CounterRng base(seed, 0x6e62);

  std::vector<CheckLine*> sampled;
  for (std::size_t l = 1; l < report.lines.size(); ++l) sampled.push_back(&report.lines[l]);
  run_sampled(sampled, samples, workers, [&](std::size_t i) {
    CounterRng rng = base.split(i);
    std::vector<SampleOutcome> out;

    {
      const TensorElement z = sample_nbhd(W0, rng).z;
      out.push_back(outcome(certified_member(W1, z) && certified_member(W2, z), "z = " + to_string(z)));
    }
    {
      const TensorElement a = sample_nbhd(half, rng).z, b = sample_nbhd(half, rng).z;
      out.push_back(outcome(certified_member(W1, a + b), "a = " + to_string(a) + ", b = " + to_string(b)));
    }
    {
      const TensorElement z = sample_nbhd(W1, rng).z;
      const Rational lambda = rng.uniform_rational(-1, 1, 8);
      const bool ok = certified_member(W1, lambda * z) && certified_member(W1, Rational(-1) * z);
      out.push_back(outcome(ok, "z = " + to_string(z) + ", lambda = " + to_string(lambda)));
    }
    {
      const NbhdSample zs = sample_nbhd(W1, rng, ratio(3, 4));
      Rational s, t;
      for (const auto& x : zs.xs) s = max_value(s, W1.p()(x));
      for (const auto& y : zs.ys) t = max_value(t, W1.q()(y));
      const TensorNbhd Wz = W1.scaled(1 - s, 1 - t);
      const NbhdSample ws = sample_nbhd(Wz, rng);
      const TensorElement sum = zs.z + ws.z;
      out.push_back(outcome(certified_member(W1, sum), "z = " + to_string(zs.z) + ", w = " + to_string(ws.z)));

      bool dominated = true;
      std::string witness;
      TensorElement regrouped(W1.rows(), W1.cols());
      for (std::size_t a = 0; a < zs.parts.size(); ++a)
        for (std::size_t b = 0; b < ws.parts.size(); ++b) {
          const LatticeElement xu = abs(zs.xs[a]) + abs(ws.xs[b]);
          const LatticeElement yv = abs(zs.ys[a]) + abs(ws.ys[b]);
          const TensorElement zw = zs.parts[a] + ws.parts[b];
          const bool ok = W1.p()(xu) <= 1 && W1.q()(yv) <= 1 && leq(abs(zw), rank_one(xu, yv));
          if (!ok && dominated) {
            dominated = false;
            witness = "x_i + u_j = " + to_string(xu) + ", y_i + v_j = " + to_string(yv);
          }
          regrouped = regrouped + (zs.lambda[a] * ws.lambda[b]) * zw;
        }
      out.push_back(outcome(dominated, witness));
      out.push_back(outcome(regrouped == sum, "z + w = " + to_string(sum) + " but regrouped " + to_string(regrouped)));
    }
    {
      const TensorElement u = sample_nbhd(W1, rng).z;
      TensorElement v(u.rows(), u.cols());
      for (std::size_t r = 0; r < u.rows(); ++r)
        for (std::size_t c = 0; c < u.cols(); ++c) v(r, c) = u(r, c) * rng.uniform_rational(-1, 1, 4);
      const bool ok = nbhd_member(W1, u) != Membership::Member || nbhd_member(W1, v) != Membership::NonMember;
      out.push_back(outcome(ok, "u = " + to_string(u) + ", v = " + to_string(v)));
    }
    return out;
  });
  return report;
}

Report density_check(std::size_t max_dim, std::uint64_t seed, std::size_t samples, std::size_t workers) {
  if (max_dim == 0) throw InvalidArgument("max_dim must be >= 1");
  Report report{"density", {}};
  auto line = [&](std::string id, std::string statement) {
    report.lines.push_back({std::move(id), std::move(statement), Expectation::Holds, 0, 0, {}, {}});
  };
  line("density/epsilon-approximation", "|a - b| <= eps u (x) v with b = a in the algebraic tensor product");
  line("density/matrix-units", "e_i (x) e_j is the matrix unit E_ij");
  line("density/sup-recovery", "c >= 0 is the supremum of rank-one elements below it");
  line("density/dominating-rank-one", "u >= 0 lies below a (x) b with a, b >= 0");
  line("density/abs-of-rank-one", "|x (x) y| = |x| (x) |y|");
  report.lines[0].note = "holds with b = a since every matrix is a finite sum of rank-one elements";

  const CounterRng base(seed, 0x64656e);
  std::vector<CheckLine*> lines;
  for (auto& l : report.lines) lines.push_back(&l);
  run_sampled(lines, samples, workers, [&](std::size_t s) {
    CounterRng rng = base.split(s);
    const auto n = static_cast<std::size_t>(rng.uniform_int(1, static_cast<std::int64_t>(max_dim)));
    const auto m = static_cast<std::size_t>(rng.uniform_int(1, static_cast<std::int64_t>(max_dim)));
    std::vector<SampleOutcome> out;

    const TensorElement a = random_tensor(rng, n, m);
    TensorElement b(n, m);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < m; ++c)
        if (a(r, c) != 0) b = b + rank_one(LatticeElement::unit(n, r, a(r, c)), LatticeElement::unit(m, c));
    const Rational eps = rng.uniform_rational(ratio(1, 8), 1, 8);
    const TensorElement uv = rank_one(random_positive(rng, n), random_positive(rng, m));
    out.push_back(outcome(leq(abs(a - b), eps * uv), "a = " + to_string(a)));

    const auto i = static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(n) - 1));
    const auto j = static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(m) - 1));
    TensorElement unit(n, m);
    unit(i, j) = 1;
    out.push_back(outcome(rank_one(LatticeElement::unit(n, i), LatticeElement::unit(m, j)) == unit,
                          "i = " + std::to_string(i) + ", j = " + std::to_string(j)));

    const TensorElement c = abs(random_tensor(rng, n, m));
    const auto family = rank_one_sup_recover(c);
    bool below = true;
    for (const auto& pr : family) below = below && leq(rank_one(pr.a, pr.b), c);
    out.push_back(outcome(below && supremum(n, m, family) == c, "c = " + to_string(c)));

    const RankOnePair d = dominating_rank_one(c);
    out.push_back(outcome(d.a.is_nonnegative() && d.b.is_nonnegative() && leq(c, rank_one(d.a, d.b)),
                          "u = " + to_string(c)));

    const LatticeElement x = random_element(rng, n), y = random_element(rng, m);
    out.push_back(outcome(abs(rank_one(x, y)) == rank_one(abs(x), abs(y)), "x = " + to_string(x) + ", y = " + to_string(y)));
    return out;
  });
  return report;
}

}  // namespace fremlin
