#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "fremlin/errors.hpp"
#include "fremlin/json_io.hpp"
#include "fremlin/suite.hpp"

namespace {

using namespace fremlin;

constexpr int kOk = 0;
constexpr int kMalformed = 1;
constexpr int kUndecided = 2;
constexpr int kViolation = 3;

struct Options {
  std::uint64_t seed = 42;
  std::size_t samples = 200;
  std::optional<std::size_t> kmax;
  std::size_t restarts = 2;
  std::string json_out;
  std::string tolerance = "0";
  std::size_t workers = 1;
  bool heuristic = false;
};

// An argument is inline JSON when it starts with '{' or '[', a file path otherwise.
Json load(const std::string& flag, const std::string& arg) {
  std::string text = arg;
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first == std::string::npos || (arg[first] != '{' && arg[first] != '[')) {
    std::ifstream in(arg);
    if (!in) throw ParseError(flag, "cannot read file '" + arg + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return parse_json_text(text);
  } catch (const ParseError& e) {
    throw ParseError(flag, e.what());
  }
}

template <class T, class Reader>
T read(const std::string& flag, const std::string& arg, Reader reader) {
  const Json j = load(flag, arg);
  try {
    return reader(j, "");
  } catch (const ParseError& e) {
    throw ParseError(flag, e.what());
  }
}

Rational read_rational(const std::string& flag, const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const Error& e) {
    throw ParseError(flag, e.what());
  }
}

SearchBudget budget_of(const Options& o) {
  SearchBudget b;
  b.k_max = o.kmax;
  b.restarts = o.restarts;
  b.seed = o.seed;
  b.workers = o.workers;
  b.exact_program = !o.heuristic;
  return b;
}

void emit(const Options& o, const std::string& text) {
  if (o.json_out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.json_out, std::ios::binary);
  if (!out) throw Error("cannot write '" + o.json_out + "'");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact projective tensor seminorms on finite-dimensional vector lattices"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--seed", o.seed, "Seed for every random stream");
  app.add_option("--samples", o.samples, "Samples per statement in `suite`")->check(CLI::PositiveNumber);
  app.add_option("--kmax", o.kmax, "Maximum rank of alternating searches (default n*m)")->check(CLI::PositiveNumber);
  app.add_option("--restarts", o.restarts, "Alternating-search restarts")->check(CLI::PositiveNumber);
  app.add_option("--json", o.json_out, "Write the JSON result to this path instead of stdout");
  app.add_option("--tolerance", o.tolerance, "Largest accepted certificate gap (rational)");
  app.add_flag("--heuristic", o.heuristic, "Skip the exact lifted program; bounds may leave a gap");
  app.add_option("--workers", o.workers, "Worker threads; results do not depend on it")->check(CLI::PositiveNumber);

  std::string p_arg, q_arg, u_arg;
  auto* seminorm = app.add_subcommand("seminorm", "Certify (p (x) q)(u) with an exact lower/upper interval");
  seminorm->add_option("--p", p_arg, "Seminorm on the row space (file or inline JSON)")->required();
  seminorm->add_option("--q", q_arg, "Seminorm on the column space (file or inline JSON)")->required();
  seminorm->add_option("--u", u_arg, "Tensor {\"shape\",\"entries\"} (file or inline JSON)")->required();

  std::string set_arg, nbhd_arg, point_arg, radius_arg = "1";
  auto* member = app.add_subcommand("member", "Membership in a generated set (exact) or a tensor neighborhood");
  auto* set_opt = member->add_option("--set", set_arg, "Generated set JSON");
  auto* nbhd_opt = member->add_option("--nbhd", nbhd_arg, "Neighborhood {\"U\",\"V\"} JSON");
  set_opt->excludes(nbhd_opt);
  member->add_option("--point", point_arg, "Element (with --set) or tensor (with --nbhd)")->required();
  member->add_option("--radius", radius_arg, "Query u in r W (with --nbhd)");

  std::string z_arg, x_arg, y_arg;
  auto* decompose = app.add_subcommand("decompose", "Split z with |z| <= |x| + |y| into z1 + z2, |z1| <= |x|, |z2| <= |y|");
  decompose->add_option("--z", z_arg, "Element to split")->required();
  decompose->add_option("--x", x_arg, "First bound")->required();
  decompose->add_option("--y", y_arg, "Second bound")->required();

  auto* suite = app.add_subcommand("suite", "Run every property suite and print a JSON report");

  CLI11_PARSE(app, argc, argv);

  try {
    const Rational tolerance = read_rational("--tolerance", o.tolerance);
    if (tolerance < 0) throw ParseError("--tolerance", "must be nonnegative");

    if (*seminorm) {
      const auto p = read<RieszSeminorm>("--p", p_arg, seminorm_from_json);
      const auto q = read<RieszSeminorm>("--q", q_arg, seminorm_from_json);
      const auto u = read<TensorElement>("--u", u_arg, tensor_from_json);
      if (u.rows() != p.dim() || u.cols() != q.dim())
        throw ParseError("--u", "shape does not match the seminorm dimensions");
      const SeminormCertificate cert = seminorm_certify(p, q, u, budget_of(o));
      emit(o, to_json(cert).dump(2) + "\n");
      return cert.gap() <= tolerance ? kOk : kUndecided;
    }

    if (*member) {
      Json out = Json::object();
      Membership answer;
      if (!set_arg.empty()) {
        const auto set = read<GeneratedSet>("--set", set_arg, set_from_json);
        const auto x = read<LatticeElement>("--point", point_arg, element_from_json);
        if (x.dim() != set.dim()) throw ParseError("--point", "dimension does not match the set");
        answer = fremlin::member(set, x) ? Membership::Member : Membership::NonMember;
      } else if (!nbhd_arg.empty()) {
        const auto W = read<TensorNbhd>("--nbhd", nbhd_arg, nbhd_from_json);
        const auto u = read<TensorElement>("--point", point_arg, tensor_from_json);
        if (u.rows() != W.rows() || u.cols() != W.cols())
          throw ParseError("--point", "shape does not match the neighborhood");
        const Rational radius = read_rational("--radius", radius_arg);
        if (radius < 0) throw ParseError("--radius", "must be nonnegative");
        const SeminormCertificate cert = seminorm_certify(W.p(), W.q(), u, budget_of(o));
        answer = classify(cert, radius);
        out["lower"] = to_string(cert.lower);
        out["upper"] = to_string(cert.upper);
        out["radius"] = to_string(radius);
      } else {
        throw ParseError("member", "one of --set or --nbhd is required");
      }
      Json result{{"answer", to_string(answer)}};
      result.update(out);
      emit(o, result.dump(2) + "\n");
      return answer == Membership::Undecided ? kUndecided : kOk;
    }

    if (*decompose) {
      const auto z = read<LatticeElement>("--z", z_arg, element_from_json);
      const auto x = read<LatticeElement>("--x", x_arg, element_from_json);
      const auto y = read<LatticeElement>("--y", y_arg, element_from_json);
      RieszSplit split{z, z};
      try {
        split = riesz_decompose(z, x, y);
      } catch (const PreconditionViolation& e) {
        throw ParseError("--z", e.what());
      } catch (const DimensionMismatch& e) {
        throw ParseError("--z", e.what());
      }
      emit(o, Json{{"z1", to_json(split.first)}, {"z2", to_json(split.second)}}.dump(2) + "\n");
      return kOk;
    }

    if (*suite) {
      SuiteConfig config;
      config.seed = o.seed;
      config.samples = o.samples;
      config.workers = o.workers;
      const SuiteResult result = run_suite(config);
      emit(o, result.to_json_text(config));
      if (!o.json_out.empty()) std::cout << result.to_text();
      return result.passed() ? kOk : kViolation;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kMalformed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kMalformed;
  }
  return kOk;
}
