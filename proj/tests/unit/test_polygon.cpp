#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "hodge.hpp"
#include "modtheta/polygon.hpp"
#include "modtheta/random_datum.hpp"

using namespace modtheta;
using testing_support::fixture;

namespace {
std::vector<Rational> R(std::initializer_list<std::pair<Int, Int>> v) {
  std::vector<Rational> out;
  for (auto [a, b] : v) out.emplace_back(a, b);
  return out;
}
}  // namespace

TEST(Polygon, OrbitSlopes) {
  EXPECT_EQ(orbit_polygon(fixture("fix_inert21"), 0).slopes, R({{0, 1}, {1, 2}, {1, 1}}));
  auto s = fixture("fix_split");
  EXPECT_EQ(orbit_polygon(s, s.orbit_of("tau1")).slopes, R({{0, 1}, {1, 1}}));
  // f = 2, 0 on FIX-DEF: every slope is 1/2.
  EXPECT_EQ(orbit_polygon(fixture("fix_def"), 0).slopes, R({{1, 2}, {1, 2}}));
}

TEST(Polygon, EtaleOrbitIsZero) {
  RawDatum raw;
  raw.kind = "A";
  raw.n = 2;
  raw.p = 5;
  raw.orbits = {{"a"}, {"b"}};
  raw.star = {{"a", "b"}, {"b", "a"}};
  raw.cm_type = {"a"};
  raw.signature = {{"a", 0}, {"b", 2}};
  auto d = validate_datum(raw);
  EXPECT_EQ(orbit_polygon(d, d.orbit_of("a")).slopes, R({{0, 1}, {0, 1}}));
  EXPECT_EQ(orbit_polygon(d, d.orbit_of("b")).slopes, R({{1, 1}, {1, 1}}));
  EXPECT_TRUE(filtration_ranks(d, "a").empty());
}

TEST(Polygon, Amalgamate) {
  NewtonPolygon a{R({{0, 1}, {1, 1}})};
  EXPECT_EQ(amalgamate({a, a}).slopes, R({{0, 1}, {0, 1}, {1, 1}, {1, 1}}));
  NewtonPolygon b{R({{0, 1}, {1, 2}, {1, 1}})};
  EXPECT_EQ(amalgamate({b}).slopes, b.slopes);
  NewtonPolygon c{R({{1, 2}, {1, 2}})};
  EXPECT_EQ(amalgamate({a, c}).slopes, R({{0, 1}, {1, 2}, {1, 2}, {1, 1}}));
}

TEST(Polygon, Ordinary) {
  EXPECT_TRUE(is_ordinary(fixture("fix_split")));
  EXPECT_FALSE(is_ordinary(fixture("fix_inert21")));
  EXPECT_TRUE(is_ordinary(fixture("fix_inert11")));
  EXPECT_FALSE(is_ordinary(fixture("fix_def")));
}

TEST(Polygon, SlopeCounts) {
  auto d = fixture("fix_inert21");
  EXPECT_EQ(slope_counts(d, "taustar"), (std::vector<Int>{0, 1, 2}));
  EXPECT_EQ(slope_counts(fixture("fix_split"), "tau1"), (std::vector<Int>{0, 1}));
  // f = n on an orbit of size e gives (e, ..., e).
  RawDatum raw;
  raw.kind = "A";
  raw.n = 3;
  raw.p = 2;
  raw.orbits = {{"a0", "a1"}, {"b0", "b1"}};
  raw.star = {{"a0", "b0"}, {"b0", "a0"}, {"a1", "b1"}, {"b1", "a1"}};
  raw.cm_type = {"a0", "a1"};
  raw.signature = {{"a0", 3}, {"a1", 3}, {"b0", 0}, {"b1", 0}};
  auto full = validate_datum(raw);
  EXPECT_EQ(slope_counts(full, "a0"), (std::vector<Int>{2, 2, 2}));
  EXPECT_EQ(filtration_ranks(full, "a0"), std::vector<Int>{3});
}

TEST(Polygon, FiltrationRanks) {
  auto d = fixture("fix_inert21");
  EXPECT_EQ(filtration_ranks(d, "tau"), (std::vector<Int>{0, 1, 1}));
  EXPECT_EQ(filtration_ranks(d, "taustar"), (std::vector<Int>{0, 0, 1}));
}

TEST(Polygon, CaseCUnsupported) {
  auto d = fixture("fix_c");
  EXPECT_MT_ERROR(orbit_polygon(d, 0), ErrorCode::CaseCUnsupported);
}

TEST(Polygon, Breakpoints) {
  auto bp = breakpoints(orbit_polygon(fixture("fix_inert21"), 0));
  ASSERT_EQ(bp.size(), 4u);
  EXPECT_EQ(bp.back().first, 3);
  EXPECT_EQ(bp.back().second, Rational(3, 2));
}

TEST(PolygonProperty, MatchesAveragedHodgePolygons) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    auto d = random_case_a_datum(rng);
    for (int o = 0; o < static_cast<int>(d.orbits().size()); ++o) {
      auto poly = orbit_polygon(d, o);
      EXPECT_EQ(poly.slopes, oracle::averaged_hodge_slopes(d, o));
      EXPECT_TRUE(std::is_sorted(poly.slopes.begin(), poly.slopes.end()));
      Rational total(0);
      Int fsum = 0;
      for (const auto& s : poly.slopes) total += s;
      for (const auto& t : d.orbits()[o].members) fsum += d.f(t);
      EXPECT_EQ(total * static_cast<Int>(d.orbits()[o].size()), Rational(fsum));
      // Conjugate orbits have symmetric polygons: a_j + a*_{n+1-j} = 1.
      auto star_poly = orbit_polygon(d, d.star_orbit(o));
      for (int j = 0; j < d.n(); ++j) EXPECT_EQ(poly.slopes[j] + star_poly.slopes[d.n() - 1 - j], Rational(1));
    }
    bool constant = true;
    for (int o = 0; o < static_cast<int>(d.orbits().size()); ++o) {
      auto sig = d.orbit_signature(o);
      constant = constant && std::all_of(sig.begin(), sig.end(), [&](int v) { return v == sig.front(); });
    }
    EXPECT_EQ(is_ordinary(d), constant);
  }
}
