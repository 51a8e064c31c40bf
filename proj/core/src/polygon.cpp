#include "modtheta/polygon.hpp"

#include <algorithm>

#include "modtheta/errors.hpp"

namespace modtheta {

namespace {

void require_case_a(const ShimuraDatum& d) {
  if (d.kind() != Case::A) throw Error(ErrorCode::CaseCUnsupported, "Newton polygons are modeled in case A only");
}

}  // namespace

std::vector<Int> slope_counts(const ShimuraDatum& d, const std::string& tau) {
  const Orbit& o = d.orbits()[d.orbit_of(tau)];
  std::vector<Int> out(d.n(), 0);
  for (int i = 1; i <= d.n(); ++i)
    for (const auto& t : o.members)
      if (d.f(t) > d.n() - i) ++out[i - 1];
  return out;
}

NewtonPolygon orbit_polygon(const ShimuraDatum& d, int orbit) {
  require_case_a(d);
  const Orbit& o = d.orbits().at(orbit);
  NewtonPolygon poly;
  for (Int c : slope_counts(d, o.members.front())) poly.slopes.emplace_back(c, o.size());
  return poly;
}

NewtonPolygon amalgamate(const std::vector<NewtonPolygon>& polygons) {
  NewtonPolygon out;
  for (const auto& p : polygons) out.slopes.insert(out.slopes.end(), p.slopes.begin(), p.slopes.end());
  std::sort(out.slopes.begin(), out.slopes.end());
  return out;
}

bool is_ordinary(const ShimuraDatum& d) {
  require_case_a(d);
  for (int o = 0; o < static_cast<int>(d.orbits().size()); ++o)
    for (const auto& s : orbit_polygon(d, o).slopes)
      if (s != Rational(0) && s != Rational(1)) return false;
  return true;
}

std::vector<Int> filtration_ranks(const ShimuraDatum& d, const std::string& tau) {
  require_case_a(d);
  if (d.f(tau) == 0) return {};
  auto poly = orbit_polygon(d, d.orbit_of(tau));
  std::vector<Int> ranks;
  for (int j = 1; j <= d.n(); ++j) {
    if (j == 1 || poly.slopes[j - 1] != poly.slopes[j - 2]) ranks.push_back(0);
    if (d.f(tau) > d.n() - j) ++ranks.back();
  }
  return ranks;
}

std::vector<std::pair<Int, Rational>> breakpoints(const NewtonPolygon& poly) {
  std::vector<std::pair<Int, Rational>> out{{0, Rational(0)}};
  Rational y(0);
  for (std::size_t i = 0; i < poly.slopes.size(); ++i) {
    y += poly.slopes[i];
    bool last = i + 1 == poly.slopes.size();
    if (last || poly.slopes[i + 1] != poly.slopes[i]) out.emplace_back(static_cast<Int>(i + 1), y);
  }
  return out;
}

}  // namespace modtheta
