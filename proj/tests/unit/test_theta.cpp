#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "modtheta/random_datum.hpp"
#include "modtheta/theta.hpp"

using namespace modtheta;
using testing_support::fixture;
using testing_support::W;

namespace {

OperatorDescriptor op(const ShimuraDatum& d, const std::string& text) { return parse_operator(d, text); }

const char* kBasic = "ThetaBasic(sigma={tau,taustar}, tbar=tau)";
const char* kTilde = "ThetaTilde(sigma={tau,taustar}, lambda={tau:1,0;taustar:1})";

}  // namespace

TEST(Theta, ApplicabilityExamples) {
  auto d = fixture("fix_inert21");
  auto k = W(d, "tau:2,2;taustar:5");
  EXPECT_TRUE(applicable(d, op(d, kBasic), k).ok);
  auto th = applicable(d, op(d, "Theta(sigma={tau,taustar}, lambda={tau:1,0;taustar:1}, variant=general)"), k);
  EXPECT_FALSE(th.ok);
  EXPECT_EQ(th.reason, "lambda and lambda-delta(tau) not good");
  EXPECT_FALSE(applicable(d, op(d, "ThetaBasic(sigma={taustar}, tbar=tau)"), k).ok);
  EXPECT_FALSE(applicable(d, op(d, "ThetaBasic(sigma={tau,taustar}, tbar=taustar)"), k).ok);
  EXPECT_FALSE(applicable(d, op(d, "ThetaBasic(sigma={tau,taustar}, tbar=tau)"), W(d, "tau:1,0")).ok);
}

TEST(Theta, ThetaBasicTarget) {
  auto d = fixture("fix_inert21");
  auto r = apply(d, op(d, kBasic), W(d, "tau:2,2;taustar:5"));
  // kappa + 8 at both embeddings + delta(tau) = (1,0 ; 1).
  EXPECT_EQ(r.target, W(d, "tau:11,10;taustar:14"));
  EXPECT_EQ(r.hasse_part, W(d, "tau:8,8;taustar:8"));
  EXPECT_EQ(r.lambda_part, delta(d, "tau"));
  EXPECT_EQ(add(d, add(d, add(d, r.source, r.lambda_part), r.hasse_part), r.twist_part), r.target);
}

TEST(Theta, ThetaTildeTarget) {
  auto d = fixture("fix_inert21");
  auto r = apply(d, op(d, kTilde), W(d, "tau:2,2;taustar:5"));
  EXPECT_EQ(r.target, W(d, "tau:10,10;taustar:17"));
  EXPECT_EQ(r.twist_part, W(d, "taustar:4"));
}

TEST(Theta, ThetaTildeBasicTarget) {
  auto d = fixture("fix_inert21");
  auto r = apply(d, op(d, "ThetaTildeBasic(sigma={tau,taustar}, tbar=tau)"), W(d, "tau:2,2;taustar:5"));
  EXPECT_EQ(r.target, W(d, "tau:10,10;taustar:17"));
}

TEST(Theta, ThetaVariantsOnInert11) {
  auto d = fixture("fix_inert11");
  auto k = W(d, "tau:1;taustar:1");
  auto allgood = apply(d, op(d, "Theta(sigma={tau,taustar}, lambda={tau:2;taustar:2}, variant=allgood)"), k);
  EXPECT_EQ(allgood.target, W(d, "tau:19;taustar:19"));
  auto general = apply(d, op(d, "Theta(sigma={tau,taustar}, lambda={tau:2;taustar:2}, variant=general)"), k);
  EXPECT_EQ(general.target, W(d, "tau:35;taustar:35"));
  EXPECT_EQ(general.chosen_witness, "lambda");
}

TEST(Theta, MaassShimuraAndOmol) {
  auto d = fixture("fix_inert21");
  auto k = W(d, "tau:2,2;taustar:5");
  auto ms = apply(d, op(d, "MaassShimura(lambda={tau:1,0;taustar:1})"), k);
  EXPECT_EQ(ms.target, W(d, "tau:3,2;taustar:6"));
  EXPECT_MT_ERROR(apply(d, op(d, "MaassShimura(lambda={tau:1,0})"), k), ErrorCode::NotApplicable);
  auto omol = apply(d, op(d, "ThetaOMOL(sigma={tau,taustar}, lambda={tau:1,0;taustar:1})"), W(d, "taustar:2"));
  EXPECT_EQ(omol.target, W(d, "tau:1,0;taustar:3"));
}

TEST(Theta, ProjectorAfterMaassShimuraIsZero) {
  auto d = fixture("fix_inert21");
  auto k = W(d, "tau:2,2;taustar:5");
  auto ms = op(d, "MaassShimura(lambda={tau:1,0;taustar:1})");
  auto proj = op(d, "MuOrdinaryProjector()");
  auto chain = compose(d, {ms, proj}, k);
  EXPECT_FALSE(chain[0].zero_marker);
  EXPECT_TRUE(chain[1].zero_marker);
  EXPECT_EQ(chain[1].target, chain[0].target);
  EXPECT_FALSE(compose(d, {proj}, k).back().zero_marker);
  auto hm = op(d, "HasseMult(sigma={tau})");
  EXPECT_TRUE(compose(d, {ms, proj, hm}, k).back().zero_marker);
}

TEST(Theta, HasseMult) {
  auto d = fixture("fix_inert21");
  EXPECT_EQ(apply(d, op(d, "HasseMult(sigma={tau})"), zero_weight(d)).target, W(d, "tau:8,8"));
  EXPECT_EQ(apply(d, op(d, "HasseMult(b={taustar:2})"), zero_weight(d)).target, W(d, "taustar:16"));
}

TEST(Theta, CompareRoutes) {
  auto d = fixture("fix_inert21");
  for (Int k = 1; k <= 3; ++k) EXPECT_TRUE(compare_weight_consistency(d, W(d, "taustar:" + std::to_string(k)), "tau"));
  EXPECT_TRUE(compare_weight_consistency(d, zero_weight(d), "tau"));
  EXPECT_MT_ERROR(compare_weight_consistency(d, W(d, "tau:1,1"), "tau"), ErrorCode::NotSupported);
}

TEST(Theta, TildeClosure) {
  auto d = fixture("fix_inert21");
  EXPECT_TRUE(tilde_closure_check(d, {"tau", "taustar"}, W(d, "tau:2,2;taustar:5"), "tau"));
  EXPECT_TRUE(tilde_closure_check(d, {"taustar"}, zero_weight(d), "tau"));
  EXPECT_MT_ERROR(tilde_closure_check(d, {"tau", "taustar"}, W(d, "tau:1,0"), "tau"), ErrorCode::PreconditionViolated);
}

TEST(Theta, ExploreCycles) {
  auto d = fixture("fix_inert21");
  auto hm = op(d, "HasseMult(sigma={tau})");
  auto g0 = explore_cycles(d, zero_weight(d), {hm}, 0);
  EXPECT_EQ(g0.nodes.size(), 1u);
  auto g = explore_cycles(d, zero_weight(d), {hm}, 2);
  ASSERT_EQ(g.nodes.size(), 3u);
  EXPECT_EQ(g.nodes[1], W(d, "tau:8,8"));
  EXPECT_EQ(g.nodes[2], W(d, "tau:16,16"));
  EXPECT_EQ(g.edges.size(), 2u);
  auto dead = explore_cycles(d, W(d, "tau:1,0"), {op(d, kBasic)}, 3);
  EXPECT_EQ(dead.nodes.size(), 1u);
  EXPECT_TRUE(dead.edges.empty());
  auto dot = to_dot(d, g);
  EXPECT_NE(dot.find("digraph {"), std::string::npos);
  EXPECT_NE(dot.find("\"tau:0,0;taustar:0\" -> \"tau:8,8;taustar:0\" [label=\"HasseMult(sigma={tau})\"]"),
            std::string::npos);
  auto capped = explore_cycles(d, zero_weight(d), {hm, op(d, "HasseMult(sigma={taustar})")}, 10, 5);
  EXPECT_TRUE(capped.truncated);
  EXPECT_LE(capped.nodes.size(), 5u);
}

TEST(Theta, ExploreCyclesIsDeterministic) {
  auto d = fixture("fix_inert21");
  std::vector<OperatorDescriptor> gens = {op(d, kBasic), op(d, "HasseMult(sigma={tau})"),
                                          op(d, "HasseMult(sigma={taustar})"), op(d, kTilde)};
  auto a = explore_cycles(d, W(d, "tau:2,2;taustar:5"), gens, 3);
  for (int i = 0; i < 5; ++i) {
    auto b = explore_cycles(d, W(d, "tau:2,2;taustar:5"), gens, 3);
    EXPECT_EQ(a.nodes, b.nodes);
    EXPECT_EQ(to_dot(d, a), to_dot(d, b));
  }
}

TEST(ThetaProperty, SplitVariantsDifferByNormTimesHasse) {
  std::mt19937_64 rng(31);
  RandomDatumOptions opts;
  opts.split_only = true;
  int checked = 0;
  for (int i = 0; i < 200; ++i) {
    auto d = random_case_a_datum(rng, opts);
    std::set<std::string> all(d.embeddings().begin(), d.embeddings().end());
    auto k = testing_support::random_good_weight(d, rng, 3);
    // Symmetric scalar lambda on one CM pair with f(tau) = f(tau*).
    for (const auto& t : d.cm_type()) {
      if (d.f(t) != d.f(d.star(t)) || d.f(t) == 0) continue;
      std::vector<Int> two(static_cast<std::size_t>(d.f(t)), 2);
      auto lambda = make_weight(d, {{t, two}, {d.star(t), two}});
      OperatorDescriptor g{OpKind::Theta, all, "", lambda, ThetaVariant::General, {}};
      OperatorDescriptor ag = g;
      ag.variant = ThetaVariant::AllGood;
      if (!applicable(d, g, k).ok) continue;
      auto rg = apply(d, g, k);
      auto ra = apply(d, ag, k);
      std::map<std::string, Int> b;
      for (const auto& s : d.embeddings()) b[s] = tuple_norm(lambda.at(s));
      EXPECT_EQ(rg.target, add(d, ra.target, hasse_weight(d, b)));
      Int half = 2 * d.f(t);
      EXPECT_EQ(ra.target, add(d, add(d, k, lambda), scale(d, hasse_weight(d, all), half)));
      ++checked;
    }
  }
  EXPECT_GT(checked, 20);
}

TEST(ThetaProperty, TildeTwistIsNotSymmetricOnSelfConjugateOrbits) {
  std::mt19937_64 rng(32);
  int checked = 0;
  for (int i = 0; i < 300; ++i) {
    auto d = random_case_a_datum(rng);
    for (const auto& u : upsilon(d)) {
      const int o = d.orbit_of(u);
      if (d.star_orbit(o) != o || d.orbits()[o].size() < 2) continue;
      const int m = *d.min_positive(o);
      std::map<std::string, std::vector<Int>> comps;
      for (const auto& t : d.orbits()[o].members) {
        std::vector<Int> v(static_cast<std::size_t>(d.f(t)), 0);
        v[0] = 1;
        comps[t] = v;
      }
      (void)m;
      auto lambda = make_weight(d, comps);
      if (!is_symmetric(d, lambda) || !is_simple(d, lambda)) continue;
      EXPECT_FALSE(is_symmetric(d, upsilon_twist(d, lambda)));
      ++checked;
    }
  }
  EXPECT_GT(checked, 0);
}

TEST(ThetaProperty, ThetaBasicCommutesAcrossTbar) {
  std::mt19937_64 rng(33);
  int checked = 0;
  for (int i = 0; i < 300; ++i) {
    auto d = random_case_a_datum(rng);
    std::set<std::string> all(d.embeddings().begin(), d.embeddings().end());
    std::vector<std::string> tbars;
    for (const auto& t : d.cm_type())
      if (d.f(t) > 0 && d.f(d.star(t)) > 0) tbars.push_back(t);
    if (tbars.size() < 2) continue;
    auto k = testing_support::random_good_weight(d, rng, 2);
    OperatorDescriptor a{OpKind::ThetaBasic, all, tbars[0], std::nullopt, ThetaVariant::General, {}};
    OperatorDescriptor b{OpKind::ThetaBasic, all, tbars[1], std::nullopt, ThetaVariant::General, {}};
    if (!applicable(d, a, k).ok || !applicable(d, b, k).ok) continue;
    auto ka = apply(d, a, k).target, kb = apply(d, b, k).target;
    if (!applicable(d, b, ka).ok || !applicable(d, a, kb).ok) continue;
    EXPECT_EQ(apply(d, b, ka).target, apply(d, a, kb).target);
    ++checked;
  }
  EXPECT_GT(checked, 0);
}

TEST(ThetaProperty, TargetsEqualSourcePlusLedger) {
  std::mt19937_64 rng(34);
  for (int i = 0; i < 200; ++i) {
    auto d = random_case_a_datum(rng);
    std::set<std::string> all(d.embeddings().begin(), d.embeddings().end());
    auto k = testing_support::random_good_weight(d, rng, 3);
    std::vector<OperatorDescriptor> ops;
    for (const auto& t : d.cm_type()) {
      ops.push_back({OpKind::ThetaBasic, all, t, std::nullopt, ThetaVariant::General, {}});
      ops.push_back({OpKind::ThetaTildeBasic, all, t, std::nullopt, ThetaVariant::General, {}});
      if (d.f(t) > 0 && d.f(d.star(t)) > 0) {
        auto dl = delta(d, t);
        ops.push_back({OpKind::Theta, all, "", add(d, dl, dl), ThetaVariant::General, {}});
        ops.push_back({OpKind::ThetaTilde, all, "", dl, ThetaVariant::General, {}});
        ops.push_back({OpKind::MaassShimura, {}, "", dl, ThetaVariant::General, {}});
      }
    }
    ops.push_back({OpKind::HasseMult, all, "", std::nullopt, ThetaVariant::General, {}});
    for (const auto& o : ops) {
      if (!applicable(d, o, k).ok) {
        EXPECT_MT_ERROR(apply(d, o, k), ErrorCode::NotApplicable);
        continue;
      }
      auto r = apply(d, o, k);
      EXPECT_EQ(add(d, add(d, add(d, r.source, r.lambda_part), r.hasse_part), r.twist_part), r.target);
      if (o.kind == OpKind::ThetaTildeBasic || o.kind == OpKind::ThetaTilde)
        EXPECT_TRUE(is_good(d, r.target)) << label(d, o);
    }
  }
}
