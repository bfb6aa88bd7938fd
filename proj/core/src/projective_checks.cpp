#include "fremlin/projective_checks.hpp"

#include <array>

#include "fremlin/errors.hpp"
#include "fremlin/sampling.hpp"

namespace fremlin {

namespace {

constexpr std::array<SeminormKind, 3> kAllKinds = {SeminormKind::WeightedL1, SeminormKind::WeightedOrderUnit,
                                                  SeminormKind::PolyhedralGauge};

SampleOutcome outcome(bool ok, std::string witness) { return {true, ok, ok ? std::string() : std::move(witness)}; }
SampleOutcome skipped() { return {false, true, {}}; }

std::size_t random_dim(CounterRng& rng, std::size_t max_dim) {
  return static_cast<std::size_t>(rng.uniform_int(1, static_cast<std::int64_t>(max_dim)));
}

std::string describe(const RieszSeminorm& p) {
  std::string s = to_string(p.kind()) + "(";
  if (p.kind() == SeminormKind::PolyhedralGauge) {
    for (std::size_t k = 0; k < p.generators().size(); ++k) s += (k ? ", " : "") + to_string(p.generators()[k]);
  } else {
    for (std::size_t k = 0; k < p.weights().size(); ++k) s += (k ? ", " : "") + to_string(p.weights()[k]);
  }
  return s + ")";
}

std::string interval(const SeminormCertificate& c) { return "[" + to_string(c.lower) + ", " + to_string(c.upper) + "]"; }

Report make_report(std::string suite, std::initializer_list<std::pair<const char*, const char*>> lines) {
  Report r{std::move(suite), {}};
  for (const auto& [id, statement] : lines) r.lines.push_back({id, statement, Expectation::Holds, 0, 0, {}, {}});
  return r;
}

std::vector<CheckLine*> all_lines(Report& r) {
  std::vector<CheckLine*> out;
  for (auto& l : r.lines) out.push_back(&l);
  return out;
}

Report equivalence_report() {
  return make_report("gauge-equivalence",
                     {{"gauge-equivalence/below", "r below the certified lower bound: u is not in rW"},
                      {"gauge-equivalence/between", "r between the certified bounds: any decided answer agrees with the gauge of W"},
                      {"gauge-equivalence/above", "r at or above the certified upper bound: u is in rW"},
                      {"gauge-equivalence/hull-gauge", "the gauge of W lies in every certified interval for (p (x) q)(u)"}});
}

struct EquivalenceTally {
  std::size_t gaps = 0;
  std::size_t undecided = 0;
};

// One query per regime. Contradictions: a decided tri-state answer that
// disagrees with a certificate bound or with the exact gauge of W.
std::vector<SampleOutcome> equivalence_outcomes(const TensorNbhd& W, const RieszSeminorm& p, const RieszSeminorm& q,
                                                const TensorElement& u, CounterRng& rng, EquivalenceTally& tally) {
  const SeminormCertificate weak = seminorm_certify(p, q, u, weak_budget(rng()));
  const SeminormCertificate exact = seminorm_certify(p, q, u);
  const GaugeResult g = hull_gauge(W, u);
  if (weak.gap() > 0) ++tally.gaps;

  auto query = [&](const Rational& r) -> std::pair<bool, std::string> {
    bool ok = g.finite();
    for (const SearchBudget& b : {SearchBudget{}, weak_budget(rng())}) {
      const Membership m = nbhd_member(W, u, r, b);
      if (m == Membership::Undecided) ++tally.undecided;
      if (m == Membership::NonMember) ok = ok && !(weak.upper <= r) && !(exact.upper <= r) && *g.value > r;
      if (m == Membership::Member) ok = ok && !(weak.lower > r) && !(exact.lower > r) && *g.value <= r;
    }
    return {ok, "u = " + to_string(u) + ", r = " + to_string(r) + ", weak " + interval(weak) + ", exact " +
                    interval(exact) + ", gauge " + (g.finite() ? to_string(*g.value) : "inf") + ", p = " +
                    describe(p) + ", q = " + describe(q)};
  };

  std::vector<SampleOutcome> out;
  if (weak.lower > 0) {
    auto [ok, w] = query(weak.lower * rng.uniform_rational(0, ratio(7, 8), 8));
    out.push_back(outcome(ok, w));
  } else {
    out.push_back(skipped());
  }
  {
    auto [ok, w] = query(weak.lower + weak.gap() * rng.uniform_rational(0, 1, 8));
    out.push_back(outcome(ok, w));
  }
  {
    auto [ok, w] = query(weak.upper + rng.uniform_rational(0, 2, 8));
    out.push_back(outcome(ok, w));
  }
  const bool inside = g.finite() && weak.lower <= *g.value && *g.value <= weak.upper && exact.lower == *g.value;
  out.push_back(outcome(inside, "u = " + to_string(u) + ", gauge outside " + interval(weak) + " or off " +
                                    interval(exact)));
  return out;
}

void note_tally(Report& r, const EquivalenceTally& t) {
  r.lines[1].note = std::to_string(t.gaps) + " queries with a positive gap in the weak certificate, " +
                    std::to_string(t.undecided) + " undecided answers";
}

}  // namespace

SearchBudget weak_budget(std::uint64_t seed) {
  SearchBudget b;
  b.k_max = 1;
  b.restarts = 1;
  b.seed = seed;
  b.exact_program = false;
  b.max_sweeps = 1;
  return b;
}

Report gauge_equivalence_check(const TensorNbhd& W, const RieszSeminorm& p, const RieszSeminorm& q,
                               const TensorElement& u, std::uint64_t seed) {
  const auto bp = p.unit_ball(), bq = q.unit_ball();
  if (!bp || !bq || bp->generators() != W.U().generators() || bq->generators() != W.V().generators())
    throw InvalidArgument("W is not built from the unit balls of p and q");
  Report report = equivalence_report();
  CounterRng rng(seed, 0x676175);
  EquivalenceTally tally;
  const auto outcomes = equivalence_outcomes(W, p, q, u, rng, tally);
  for (std::size_t l = 0; l < outcomes.size(); ++l)
    if (outcomes[l].counted) report.lines[l].check(outcomes[l].ok, [&] { return outcomes[l].witness; });
  note_tally(report, tally);
  return report;
}

Report gauge_equivalence_suite(std::uint64_t seed, std::size_t samples, std::size_t max_dim, std::size_t workers) {
  Report report = equivalence_report();
  const CounterRng base(seed, 0x676175);
  std::vector<EquivalenceTally> tallies(samples);
  run_sampled(all_lines(report), samples, workers, [&](std::size_t s) {
    CounterRng rng = base.split(s);
    const RieszSeminorm p = random_seminorm(rng, random_dim(rng, max_dim), kAllKinds[s % 3]);
    const RieszSeminorm q = random_seminorm(rng, random_dim(rng, max_dim), kAllKinds[(s / 3) % 3]);
    const TensorElement u = random_tensor(rng, p.dim(), q.dim(), 4, rng.coin() ? 1 : 2);
    return equivalence_outcomes(TensorNbhd::from_seminorms(p, q), p, q, u, rng, tallies[s]);
  });
  EquivalenceTally total;
  for (const auto& t : tallies) {
    total.gaps += t.gaps;
    total.undecided += t.undecided;
  }
  note_tally(report, total);
  return report;
}

namespace {

Report cross_report() {
  return make_report(
      "cross-property",
      {{"cross-property/interval", "p(x0) q(y0) lies in the certified interval for x0 (x) y0"},
       {"cross-property/exact", "the certificate for x0 (x) y0 closes with value p(x0) q(y0)"},
       {"cross-property/closed-form", "closed forms give p(x0) q(y0) on x0 (x) y0"},
       {"cross-property/product-dual", "f (x) g from supporting functionals is dominated and attains p(x0) q(y0)"}});
}

std::vector<SampleOutcome> cross_outcomes(const RieszSeminorm& p, const RieszSeminorm& q, CounterRng& rng) {
  const LatticeElement x0 = random_element(rng, p.dim(), 4, rng.coin() ? 1 : 3);
  const LatticeElement y0 = random_element(rng, q.dim(), 4, rng.coin() ? 1 : 3);
  const TensorElement u = rank_one(x0, y0);
  const Rational target = p(x0) * q(y0);
  const SeminormCertificate c = seminorm_certify(p, q, u);
  const std::string w = "x0 = " + to_string(x0) + ", y0 = " + to_string(y0) + ", p = " + describe(p) +
                        ", q = " + describe(q) + ", p(x0) q(y0) = " + to_string(target) + ", certified " +
                        interval(c);
  std::vector<SampleOutcome> out;
  out.push_back(outcome(c.lower <= target && target <= c.upper, w));
  out.push_back(outcome(c.lower == target && c.upper == target, w));
  if (auto cf = seminorm_closed_form(p, q, u))
    out.push_back(outcome(*cf == target, w + ", closed form " + to_string(*cf)));
  else
    out.push_back(skipped());
  const DualCertificate fg = product_form(p.supporting_functional(x0), q.supporting_functional(y0));
  out.push_back(outcome(fg.dominated_by(p, q) && fg.value(u) == target, w + ", f (x) g = " + to_string(fg.form)));
  return out;
}

}  // namespace

Report cross_property_check(const RieszSeminorm& p, const RieszSeminorm& q, std::size_t samples, std::uint64_t seed,
                            std::size_t workers) {
  Report report = cross_report();
  const CounterRng base(seed, 0x63726f);
  run_sampled(all_lines(report), samples, workers, [&](std::size_t s) {
    CounterRng rng = base.split(s);
    return cross_outcomes(p, q, rng);
  });
  return report;
}

Report cross_property_suite(std::uint64_t seed, std::size_t samples, std::size_t max_dim, std::size_t workers) {
  Report report = cross_report();
  const CounterRng base(seed, 0x637273);
  run_sampled(all_lines(report), samples, workers, [&](std::size_t s) {
    CounterRng rng = base.split(s);
    const RieszSeminorm p = random_seminorm(rng, random_dim(rng, max_dim), kAllKinds[s % 3]);
    const RieszSeminorm q = random_seminorm(rng, random_dim(rng, max_dim), kAllKinds[(s / 3) % 3]);
    return cross_outcomes(p, q, rng);
  });
  return report;
}

Report hausdorff_check(const SeminormFamily& P, const SeminormFamily& Q, std::size_t samples, std::uint64_t seed,
                       std::size_t workers) {
  Report report = make_report(
      "hausdorff", {{"hausdorff-separation", "every nonzero u has a pair with lower(u) >= p(x0) q(y0) > 0"}});
  CheckLine& line = report.lines[0];
  const std::size_t n = P.dim(), m = Q.dim();
  if (!P.separating() || !Q.separating()) {
    line.expected = Expectation::Refuted;
    line.note = "family is not separating; a nonzero u with every certified upper bound 0 is expected";
    const std::size_t i = P.blind_direction().value_or(0);
    const std::size_t j = Q.blind_direction().value_or(0);
    const TensorElement u = rank_one(LatticeElement::unit(n, i), LatticeElement::unit(m, j));
    bool seen = false;
    for (const auto& p : P.members())
      for (const auto& q : Q.members()) seen = seen || seminorm_certify(p, q, u).upper > 0;
    line.check(seen, [&] { return "u = " + to_string(u) + " has (p (x) q)(u) = 0 for every pair"; });
    return report;
  }
  const CounterRng base(seed, 0x686175);
  run_sampled({&line}, samples, workers, [&](std::size_t s) {
    CounterRng rng = base.split(s);
    TensorElement u = random_tensor(rng, n, m, 3);
    if (u.is_zero()) u(rng.uniform_int(0, n - 1), rng.uniform_int(0, m - 1)) = 1;
    std::size_t i = 0, j = 0;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < m; ++c)
        if (u(r, c) != 0 && u(i, j) == 0) i = r, j = c;
    const LatticeElement x0 = LatticeElement::unit(n, i, abs_value(u(i, j)));
    const LatticeElement y0 = LatticeElement::unit(m, j);
    bool found = false;
    for (const auto& p : P.members()) {
      if (p(x0) == 0) continue;
      for (const auto& q : Q.members()) {
        if (q(y0) == 0) continue;
        found = seminorm_certify(p, q, u).lower >= p(x0) * q(y0);
        if (found) break;
      }
      if (found) break;
    }
    return std::vector<SampleOutcome>{outcome(found, "u = " + to_string(u))};
  });
  return report;
}

Report certificate_axioms_check(std::uint64_t seed, std::size_t samples, std::size_t max_dim, std::size_t workers) {
  Report report = make_report(
      "certificate-axioms",
      {{"certificate/soundness", "every certificate re-verifies exactly and lower <= upper"},
       {"certificate/subadditivity", "concatenated witnesses cover u + v and upper(u + v) <= upper(u) + upper(v)"},
       {"certificate/homogeneity", "scaled witnesses cover lambda u and upper(lambda u) = |lambda| upper(u)"},
       {"certificate/monotonicity", "|v| <= |u| gives lower(v) <= upper(u)"}});
  const CounterRng base(seed, 0x636572);
  run_sampled(all_lines(report), samples, workers, [&](std::size_t s) {
    CounterRng rng = base.split(s);
    const RieszSeminorm p = random_seminorm(rng, random_dim(rng, max_dim), kAllKinds[s % 3]);
    const RieszSeminorm q = random_seminorm(rng, random_dim(rng, max_dim), kAllKinds[(s / 3) % 3]);
    const TensorElement u = random_tensor(rng, p.dim(), q.dim(), 3, 2);
    const TensorElement v = random_tensor(rng, p.dim(), q.dim(), 3, 2);
    const SeminormCertificate cu = seminorm_certify(p, q, u), cv = seminorm_certify(p, q, v);
    const SeminormCertificate wu = seminorm_certify(p, q, u, weak_budget(rng()));
    const std::string w = "p = " + describe(p) + ", q = " + describe(q) + ", u = " + to_string(u) + ", v = " +
                          to_string(v);
    std::vector<SampleOutcome> out;
    out.push_back(outcome(verify(cu, p, q, u) && verify(cv, p, q, v) && verify(wu, p, q, u), w));

    const Decomposition joined = cu.decomposition.concat(cv.decomposition);
    const SeminormCertificate cs = seminorm_certify(p, q, u + v);
    out.push_back(outcome(joined.covers(u + v) && joined.value(p, q) == cu.upper + cv.upper &&
                              cs.upper <= cu.upper + cv.upper,
                          w));

    const Rational lambda = rng.uniform_rational(-3, 3, 4);
    const Decomposition sd = cu.decomposition.scaled(lambda);
    const SeminormCertificate cl = seminorm_certify(p, q, lambda * u);
    out.push_back(outcome(sd.covers(lambda * u) && sd.value(p, q) == abs_value(lambda) * cu.upper &&
                              cl.upper == abs_value(lambda) * cu.upper,
                          w + ", lambda = " + to_string(lambda)));

    TensorElement smaller(u.rows(), u.cols());
    for (std::size_t r = 0; r < u.rows(); ++r)
      for (std::size_t c = 0; c < u.cols(); ++c) smaller(r, c) = u(r, c) * rng.uniform_rational(-1, 1, 4);
    const SeminormCertificate ws = seminorm_certify(p, q, smaller, weak_budget(rng()));
    out.push_back(outcome(ws.lower <= wu.upper && ws.lower <= cu.upper, w + ", smaller = " + to_string(smaller)));
    return out;
  });
  return report;
}

}  // namespace fremlin
