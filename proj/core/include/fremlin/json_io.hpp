#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "fremlin/hulls.hpp"
#include "fremlin/lattice.hpp"
#include "fremlin/neighborhood.hpp"
#include "fremlin/projective.hpp"
#include "fremlin/seminorm.hpp"
#include "fremlin/tensor.hpp"
#include "fremlin/universal.hpp"

namespace fremlin {

using Json = nlohmann::ordered_json;

/// Text formats:
///   rational     "p/q", "p", or a JSON integer
///   element      ["1", "-2/3"]
///   set          {"generators": [[...], ...], "decoration": ["Sol", "Conv_b"]}
///   matrix       {"shape": [n, m], "entries": [[...], ...]}
///   seminorm     {"kind": "WeightedL1" | "WeightedOrderUnit", "weights": [...]}
///                {"kind": "PolyhedralGauge", "generators": [[...], ...]}
///   nbhd         {"U": set, "V": set}
///   bimorphism   {"target_dim": g, "images": [[[...], ...], ...]}
/// Every reader throws ParseError naming the JSON-pointer path of the
/// offending field; `path` is the location of `j` itself.
Json parse_json_text(std::string_view text);

Rational rational_from_json(const Json& j, const std::string& path = "");
LatticeElement element_from_json(const Json& j, const std::string& path = "");
GeneratedSet set_from_json(const Json& j, const std::string& path = "");
TensorElement tensor_from_json(const Json& j, const std::string& path = "");
RieszSeminorm seminorm_from_json(const Json& j, const std::string& path = "");
TensorNbhd nbhd_from_json(const Json& j, const std::string& path = "");
LatticeBimorphism bimorphism_from_json(const Json& j, const std::string& path = "");

Json to_json(const Rational& r);
Json to_json(const LatticeElement& x);
Json to_json(const GeneratedSet& s);
Json to_json(const TensorElement& u);
Json to_json(const RieszSeminorm& p);
Json to_json(const SeminormCertificate& c);
Json to_json(const LatticeBimorphism& phi);
Json to_json(const TensorNbhd& W);

}  // namespace fremlin
