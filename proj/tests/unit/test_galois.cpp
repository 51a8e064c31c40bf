#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "modtheta/galois.hpp"
#include "modtheta/random_datum.hpp"

using namespace modtheta;
using testing_support::fixture;
using testing_support::W;

TEST(Galois, HeckeExponent) {
  auto i11 = fixture("fix_inert11");
  EXPECT_EQ(hecke_exponent(i11, W(i11, "tau:2;taustar:2")), 2);
  EXPECT_EQ(hecke_exponent(i11, zero_weight(i11)), 0);
  auto d = fixture("fix_inert21");
  EXPECT_EQ(hecke_exponent(d, W(d, "tau:1,0;taustar:1")), 1);
  EXPECT_MT_ERROR(hecke_exponent(d, W(d, "tau:1,0")), ErrorCode::NotSymmetric);
}

TEST(Galois, Edges) {
  auto d = fixture("fix_inert21");
  TwistState s0{W(d, "tau:2,2;taustar:5"), 0, {}};
  auto s1 = galois_edge(d, s0, parse_operator(d, "ThetaTilde(sigma={tau,taustar}, lambda={tau:1,0;taustar:1})"));
  EXPECT_EQ(s1.weight, W(d, "tau:10,10;taustar:17"));
  EXPECT_EQ(s1.cyclo_exponent, 1);
  ASSERT_EQ(s1.trail.size(), 1u);
  auto s2 = galois_edge(d, s1, parse_operator(d, "HasseMult(sigma={tau})"));
  EXPECT_EQ(s2.weight, add(d, s1.weight, W(d, "tau:8,8")));
  EXPECT_EQ(s2.cyclo_exponent, 1);
  EXPECT_EQ(s2.trail.size(), 2u);
  EXPECT_MT_ERROR(galois_edge(d, s0, parse_operator(d, "MuOrdinaryProjector()")), ErrorCode::NotApplicable);
  EXPECT_MT_ERROR(galois_edge(d, s0, parse_operator(d, "MaassShimura(lambda={tau:1,0;taustar:1})")),
                  ErrorCode::NotApplicable);
  auto s3 = galois_edge(d, s0, parse_operator(d, "ThetaBasic(sigma={tau,taustar}, tbar=tau)"));
  EXPECT_EQ(s3.cyclo_exponent, 1);
}

TEST(Galois, Orbits) {
  auto d = fixture("fix_inert21");
  auto k = W(d, "tau:2,2;taustar:5");
  auto o0 = modular_weight_orbit(d, k, 0);
  ASSERT_EQ(o0.states.size(), 1u);
  EXPECT_EQ(o0.states[0].weight, k);
  EXPECT_EQ(o0.states[0].cyclo_exponent, 0);
  auto tilde = parse_operator(d, "ThetaTilde(sigma={tau,taustar}, lambda={tau:1,0;taustar:1})");
  auto o1 = modular_weight_orbit(d, k, 1, {tilde});
  EXPECT_EQ(o1.states.size(), 2u);
  // A non-good start only moves along Hasse multiplications.
  auto bad = W(d, "tau:1,0");
  auto gens = default_galois_generators(d);
  auto ob = modular_weight_orbit(d, bad, 1, gens);
  for (const auto& s : ob.states) {
    EXPECT_EQ(s.cyclo_exponent, 0);
    for (const auto& step : s.trail) EXPECT_EQ(step.rfind("HasseMult", 0), 0u) << step;
  }
}

TEST(GaloisProperty, ExponentIsHalfLambdaSizeAlongPaths) {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 60; ++i) {
    auto d = random_case_a_datum(rng);
    auto k = testing_support::random_good_weight(d, rng, 2);
    auto gens = default_galois_generators(d);
    auto orbit = modular_weight_orbit(d, k, 2, gens, 2000);
    std::map<std::string, Int> per_label;
    for (const auto& g : gens) {
      Int inc = 0;
      if (g.kind == OpKind::Theta || g.kind == OpKind::ThetaTilde) inc = hecke_exponent(d, *g.lambda);
      if (g.kind == OpKind::ThetaBasic || g.kind == OpKind::ThetaTildeBasic) inc = 1;
      per_label[label(d, g)] = inc;
    }
    for (const auto& s : orbit.states) {
      Int expected = 0;
      for (const auto& step : s.trail) expected += per_label.at(step);
      EXPECT_EQ(s.cyclo_exponent, expected);
    }
  }
}
