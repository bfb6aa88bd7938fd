#include "fremlin/json_io.hpp"

#include "fremlin/errors.hpp"

namespace fremlin {

namespace {

std::string at(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string at(const std::string& path, std::size_t index) { return path + "/" + std::to_string(index); }

const Json& field(const Json& j, const std::string& path, const char* key) {
  if (!j.is_object()) throw ParseError(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(at(path, key), "missing field");
  return *it;
}

const Json& array(const Json& j, const std::string& path) {
  if (!j.is_array()) throw ParseError(path, "expected an array");
  if (j.empty()) throw ParseError(path, "expected a nonempty array");
  return j;
}

std::size_t positive_size(const Json& j, const std::string& path) {
  if (!j.is_number_unsigned() || j.get<std::uint64_t>() == 0) throw ParseError(path, "expected a positive integer");
  return static_cast<std::size_t>(j.get<std::uint64_t>());
}

std::vector<LatticeElement> elements(const Json& j, const std::string& path) {
  std::vector<LatticeElement> out;
  for (std::size_t k = 0; k < array(j, path).size(); ++k) out.push_back(element_from_json(j[k], at(path, k)));
  for (std::size_t k = 1; k < out.size(); ++k)
    if (out[k].dim() != out[0].dim())
      throw ParseError(at(path, k), "dimension " + std::to_string(out[k].dim()) + " differs from " +
                                        std::to_string(out[0].dim()));
  return out;
}

std::vector<Rational> rationals(const Json& j, const std::string& path) {
  std::vector<Rational> out;
  for (std::size_t k = 0; k < array(j, path).size(); ++k) out.push_back(rational_from_json(j[k], at(path, k)));
  return out;
}

// Domain checks raised while building a value become parse errors at `path`.
template <class Fn>
auto guarded(const std::string& path, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(path.empty() ? "/" : path, e.what());
  }
}

Json rows_json(const std::vector<LatticeElement>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(to_json(x));
  return out;
}

}  // namespace

Json parse_json_text(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw ParseError("", std::string("invalid JSON: ") + e.what());
  }
}

Rational rational_from_json(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw ParseError(path, "expected a rational string such as \"-2/3\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(path, e.what());
  }
}

LatticeElement element_from_json(const Json& j, const std::string& path) {
  return LatticeElement(rationals(j, path));
}

GeneratedSet set_from_json(const Json& j, const std::string& path) {
  std::vector<LatticeElement> gens = elements(field(j, path, "generators"), at(path, "generators"));
  std::vector<Hull> decoration;
  if (j.contains("decoration")) {
    const Json& d = j["decoration"];
    const std::string dpath = at(path, "decoration");
    if (!d.is_array()) throw ParseError(dpath, "expected an array of hull names");
    for (std::size_t k = 0; k < d.size(); ++k) {
      const std::string name = d[k].is_string() ? d[k].get<std::string>() : "";
      if (name == "Sol")
        decoration.push_back(Hull::Sol);
      else if (name == "Conv")
        decoration.push_back(Hull::Conv);
      else if (name == "Conv_b")
        decoration.push_back(Hull::ConvB);
      else
        throw ParseError(at(dpath, k), "expected one of \"Sol\", \"Conv\", \"Conv_b\"");
    }
  }
  return guarded(path, [&] { return GeneratedSet(std::move(gens), std::move(decoration)); });
}

TensorElement tensor_from_json(const Json& j, const std::string& path) {
  const Json& shape = field(j, path, "shape");
  const std::string spath = at(path, "shape");
  if (!shape.is_array() || shape.size() != 2) throw ParseError(spath, "expected [rows, cols]");
  const std::size_t n = positive_size(shape[0], at(spath, 0)), m = positive_size(shape[1], at(spath, 1));
  const Json& entries = field(j, path, "entries");
  const std::string epath = at(path, "entries");
  if (!entries.is_array() || entries.size() != n)
    throw ParseError(epath, "expected " + std::to_string(n) + " rows");
  TensorElement u(n, m);
  for (std::size_t i = 0; i < n; ++i) {
    const std::vector<Rational> row = rationals(entries[i], at(epath, i));
    if (row.size() != m) throw ParseError(at(epath, i), "expected " + std::to_string(m) + " entries");
    for (std::size_t c = 0; c < m; ++c) u(i, c) = row[c];
  }
  return u;
}

RieszSeminorm seminorm_from_json(const Json& j, const std::string& path) {
  const Json& kind = field(j, path, "kind");
  const std::string name = kind.is_string() ? kind.get<std::string>() : "";
  if (name == "WeightedL1" || name == "WeightedOrderUnit") {
    std::vector<Rational> w = rationals(field(j, path, "weights"), at(path, "weights"));
    return guarded(at(path, "weights"), [&] {
      return name == "WeightedL1" ? RieszSeminorm::weighted_l1(std::move(w)) : RieszSeminorm::order_unit(std::move(w));
    });
  }
  if (name == "PolyhedralGauge") {
    std::vector<LatticeElement> gens = elements(field(j, path, "generators"), at(path, "generators"));
    return guarded(at(path, "generators"), [&] { return RieszSeminorm::polyhedral(std::move(gens)); });
  }
  throw ParseError(at(path, "kind"), "expected \"WeightedL1\", \"WeightedOrderUnit\" or \"PolyhedralGauge\"");
}

TensorNbhd nbhd_from_json(const Json& j, const std::string& path) {
  GeneratedSet U = set_from_json(field(j, path, "U"), at(path, "U"));
  GeneratedSet V = set_from_json(field(j, path, "V"), at(path, "V"));
  return guarded(path, [&] { return TensorNbhd(std::move(U), std::move(V)); });
}

LatticeBimorphism bimorphism_from_json(const Json& j, const std::string& path) {
  const std::size_t g = positive_size(field(j, path, "target_dim"), at(path, "target_dim"));
  const Json& images = field(j, path, "images");
  const std::string ipath = at(path, "images");
  std::vector<std::vector<LatticeElement>> rows;
  for (std::size_t i = 0; i < array(images, ipath).size(); ++i) {
    rows.push_back(elements(images[i], at(ipath, i)));
    for (std::size_t c = 0; c < rows.back().size(); ++c)
      if (rows.back()[c].dim() != g)
        throw ParseError(at(at(ipath, i), c), "image dimension differs from target_dim " + std::to_string(g));
  }
  return guarded(ipath, [&] { return LatticeBimorphism(g, std::move(rows)); });
}

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const LatticeElement& x) {
  Json out = Json::array();
  for (const auto& c : x.coords()) out.push_back(to_string(c));
  return out;
}

Json to_json(const GeneratedSet& s) {
  Json deco = Json::array();
  for (const Hull h : s.decoration()) deco.push_back(to_string(h));
  return Json{{"generators", rows_json(s.generators())}, {"decoration", deco}};
}

Json to_json(const TensorElement& u) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < u.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < u.cols(); ++j) row.push_back(to_string(u(i, j)));
    rows.push_back(std::move(row));
  }
  return Json{{"shape", {u.rows(), u.cols()}}, {"entries", std::move(rows)}};
}

Json to_json(const RieszSeminorm& p) {
  Json out{{"kind", to_string(p.kind())}};
  if (p.kind() == SeminormKind::PolyhedralGauge) {
    out["generators"] = rows_json(p.generators());
  } else {
    Json w = Json::array();
    for (const auto& v : p.weights()) w.push_back(to_string(v));
    out["weights"] = std::move(w);
  }
  return out;
}

Json to_json(const SeminormCertificate& c) {
  Json terms = Json::array();
  for (const auto& t : c.decomposition.terms) terms.push_back(Json{{"x", to_json(t.x)}, {"y", to_json(t.y)}});
  return Json{{"lower", to_string(c.lower)},
              {"upper", to_string(c.upper)},
              {"gap", to_string(c.gap())},
              {"upper_route", c.upper_route},
              {"dual", {{"M", to_json(c.dual.form)["entries"]}}},
              {"decomposition", std::move(terms)}};
}

Json to_json(const LatticeBimorphism& phi) {
  Json images = Json::array();
  for (const auto& row : phi.images()) images.push_back(rows_json(row));
  return Json{{"target_dim", phi.target_dim()}, {"images", std::move(images)}};
}

Json to_json(const TensorNbhd& W) { return Json{{"U", to_json(W.U())}, {"V", to_json(W.V())}}; }

}  // namespace fremlin
