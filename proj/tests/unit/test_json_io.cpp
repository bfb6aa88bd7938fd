#include <gtest/gtest.h>

#include "fremlin/errors.hpp"
#include "fremlin/json_io.hpp"

using namespace fremlin;

namespace {

std::string path_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e.path();
  }
  return "<no error>";
}

}  // namespace

TEST(JsonIo, RoundTrips) {
  const LatticeElement x{Rational(1), ratio(-2, 3)};
  EXPECT_EQ(to_json(x).dump(), R"(["1","-2/3"])");
  EXPECT_EQ(element_from_json(to_json(x)), x);

  const GeneratedSet s({x, LatticeElement{Rational(0), Rational(3)}}, {Hull::Sol, Hull::ConvB});
  const GeneratedSet s2 = set_from_json(to_json(s));
  EXPECT_EQ(s2.generators(), s.generators());
  EXPECT_EQ(s2.decoration(), s.decoration());

  const TensorElement u(std::vector<std::vector<Rational>>{{1, -2}, {ratio(1, 2), 0}});
  EXPECT_EQ(tensor_from_json(to_json(u)), u);
  EXPECT_EQ(to_json(u).dump(), R"({"shape":[2,2],"entries":[["1","-2"],["1/2","0"]]})");

  for (const auto& p : {RieszSeminorm::weighted_l1({1, 2}), RieszSeminorm::order_unit({ratio(1, 2), 3}),
                        RieszSeminorm::polyhedral({x, LatticeElement{Rational(1), Rational(1)}})})
    EXPECT_EQ(seminorm_from_json(to_json(p)), p);

  const LatticeBimorphism phi = LatticeBimorphism::canonical(2, 2);
  EXPECT_EQ(bimorphism_from_json(to_json(phi)).images(), phi.images());
}

TEST(JsonIo, AcceptsIntegerScalars) {
  EXPECT_EQ(element_from_json(parse_json_text("[1, \"2/4\"]")), (LatticeElement{Rational(1), ratio(1, 2)}));
}

TEST(JsonIo, CertificateLayout) {
  const auto l1 = RieszSeminorm::unit_l1(2);
  const TensorElement u(std::vector<std::vector<Rational>>{{1, -2}, {3, 4}});
  const Json j = to_json(seminorm_certify(l1, l1, u));
  EXPECT_EQ(j["lower"], "10");
  EXPECT_EQ(j["upper"], "10");
  EXPECT_EQ(j["gap"], "0");
  EXPECT_TRUE(j["dual"]["M"].is_array());
  EXPECT_TRUE(j["decomposition"].is_array());
  EXPECT_TRUE(j["decomposition"][0].contains("x"));
}

TEST(JsonIo, ErrorsCarryPointerPaths) {
  EXPECT_EQ(path_of([] { element_from_json(parse_json_text(R"(["1","x"])")); }), "/1");
  EXPECT_EQ(path_of([] { element_from_json(parse_json_text(R"([])")); }), "");
  EXPECT_EQ(path_of([] { set_from_json(parse_json_text(R"({"generators":[["1"],["1","2"]]})")); }), "/generators/1");
  EXPECT_EQ(path_of([] { set_from_json(parse_json_text(R"({"generators":[["1"]],"decoration":["Hull"]})")); }),
            "/decoration/0");
  EXPECT_EQ(path_of([] { set_from_json(parse_json_text(R"({"gens":[]})")); }), "/generators");
  EXPECT_EQ(path_of([] { tensor_from_json(parse_json_text(R"({"shape":[2,1],"entries":[["1"],["2","3"]]})")); }),
            "/entries/1");
  EXPECT_EQ(path_of([] { tensor_from_json(parse_json_text(R"({"shape":[0,1],"entries":[]})")); }), "/shape/0");
  EXPECT_EQ(path_of([] { seminorm_from_json(parse_json_text(R"({"kind":"L2","weights":["1"]})")); }), "/kind");
  EXPECT_EQ(path_of([] { seminorm_from_json(parse_json_text(R"({"kind":"WeightedL1","weights":["-1"]})")); }),
            "/weights");
  EXPECT_EQ(path_of([] { bimorphism_from_json(parse_json_text(R"({"target_dim":1,"images":[[["1"],["1"]]]})")); }),
            "/images");
  EXPECT_EQ(path_of([] { bimorphism_from_json(parse_json_text(R"({"target_dim":2,"images":[[["1"]]]})")); }),
            "/images/0/0");
  EXPECT_EQ(path_of([] {
              nbhd_from_json(parse_json_text(
                  R"({"U":{"generators":[["1","0"]],"decoration":["Sol","Conv_b"]},"V":{"generators":[["1"]],"decoration":["Sol","Conv_b"]}})"));
            }),
            "/");
  EXPECT_THROW(parse_json_text("{"), ParseError);
}
