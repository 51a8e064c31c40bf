#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "modtheta/io.hpp"
#include "modtheta/theta.hpp"

using namespace modtheta;
using testing_support::fixture;
using testing_support::W;

TEST(Io, KeyValueAndJsonAgree) {
  for (const char* name : {"fix_split", "fix_inert21", "fix_inert11", "fix_def", "fix_c"}) {
    auto d = fixture(name);
    auto j = datum_to_json(d);
    auto again = validate_datum(parse_datum_document(j.dump()));
    EXPECT_EQ(datum_to_json(again), j) << name;
  }
}

TEST(Io, ParseErrors) {
  EXPECT_MT_ERROR(parse_datum_document("case = \"A\"\nn = [1"), ErrorCode::ParseError);
  EXPECT_MT_ERROR(parse_datum_document("{\"case\": "), ErrorCode::ParseError);
  auto d = fixture("fix_inert21");
  EXPECT_MT_ERROR(parse_weight(d, "tau:1,x"), ErrorCode::ParseError);
  EXPECT_MT_ERROR(parse_operator(d, "Bogus(sigma={tau})"), ErrorCode::ParseError);
  EXPECT_MT_ERROR(load_datum_file("/nonexistent/datum.toml"), ErrorCode::ParseError);
}

TEST(Io, WeightRoundTrip) {
  auto d = fixture("fix_inert21");
  auto w = W(d, "tau:3,1;taustar:2");
  EXPECT_EQ(weight_from_json(d, weight_to_json(d, w)), w);
  EXPECT_EQ(weight_from_json(d, Json::parse(R"({"tau": [3, 1], "taustar": ["2"]})")), w);
  EXPECT_EQ(W(d, ""), zero_weight(d));
}

TEST(Io, OperatorLabelsRoundTrip) {
  auto d = fixture("fix_inert21");
  for (const char* text : {"ThetaBasic(sigma={tau,taustar}, tbar=tau)",
                           "Theta(sigma={tau,taustar}, lambda={tau:1,0;taustar:1}, variant=general)",
                           "ThetaTilde(sigma={tau,taustar}, lambda={tau:1,0;taustar:1})",
                           "ThetaTildeBasic(sigma={taustar}, tbar=tau)", "MaassShimura(lambda={tau:1,0;taustar:1})",
                           "HasseMult(sigma={tau})", "HasseMult(b={taustar:2})", "MuOrdinaryProjector()"}) {
    EXPECT_EQ(label(d, parse_operator(d, text)), text);
  }
  auto all = parse_operator(d, "ThetaBasic(sigma=all, tbar=tau)");
  EXPECT_EQ(all.sigma, (std::set<std::string>{"tau", "taustar"}));
}
