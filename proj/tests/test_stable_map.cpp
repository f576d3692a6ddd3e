#include <doctest.h>

#include "hf/stable_map.hpp"

using namespace hf;

namespace {

// Degree-2 cover of a two-component target: two inseparable components over
// the ends, a genus-1 component contracted over the middle.
StableMapData chain_over_two() {
  StableMapData m;
  m.source.vertices = {{"C0a", 0}, {"C1", 1}, {"C0b", 0}};
  m.source.edges = {{"C0a", "C1"}, {"C1", "C0b"}};
  m.source.legs = {{"0", "C0a"}, {"lambda", "C0a"}, {"1", "C0b"}, {"inf", "C0b"}};
  m.target.vertices = {{"D0", 0}, {"D1", 0}};
  m.target.edges = {{"D0", "D1"}};
  m.target.legs = {{"0", "D0"}, {"lambda", "D0"}, {"1", "D1"}, {"inf", "D1"}};
  m.vertex_map = {{"C0a", "D0"}, {"C1", "D0"}, {"C0b", "D1"}};
  m.edge_map = {EdgeImage::to_vertex("D0"), EdgeImage::to_edge(0)};
  m.leg_map = {{"0", "0"}, {"1", "1"}, {"inf", "inf"}, {"lambda", "lambda"}};
  m.degree = {{"C0a", 2}, {"C1", 0}, {"C0b", 2}};
  m.behavior = {{"C0a", Behavior::inseparable(2)},
                {"C1", Behavior::contracted()},
                {"C0b", Behavior::inseparable(2)}};
  m.total_degree = 2;
  m.genus = 1;
  return m;
}

bool has_code(const std::vector<Violation>& vs, errc code) {
  for (const auto& v : vs) {
    if (v.code == code) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("a well-formed map type validates and reports its attributes") {
  auto m = StableMapType::validate(chain_over_two());
  CHECK(m.source().arithmetic_genus() == 1);
  CHECK(m.target().arithmetic_genus() == 0);

  auto deg = m.degree_conservation();
  CHECK(deg.conserved);
  CHECK(deg.sums.at("D0") == 2);
  CHECK(deg.sums.at("D1") == 2);

  auto stab = m.map_stability();
  CHECK(stab.stable);  // the contracted C1 has 2*1 - 2 + 2 = 2 > 0

  auto fin = m.finiteness();
  CHECK_FALSE(fin.is_finite);
  CHECK(fin.has_inseparable_part);

  CHECK(m.target().pointed_stability().stable);
  CHECK(m.source().pointed_stability().stable);
}

TEST_CASE("contracted components must have degree zero and vice versa") {
  auto m = chain_over_two();
  m.degree["C1"] = 1;
  CHECK(has_code(StableMapType::check(m), errc::contracted_with_degree));

  auto m2 = chain_over_two();
  m2.behavior["C1"] = Behavior::separable();
  CHECK(has_code(StableMapType::check(m2), errc::contracted_with_degree));

  auto m3 = chain_over_two();
  m3.behavior["C0a"] = Behavior::inseparable(1);
  CHECK(has_code(StableMapType::check(m3), errc::invalid_behavior));
}

TEST_CASE("edges must land on edges or vertices compatibly") {
  auto m = chain_over_two();
  m.edge_map[0] = EdgeImage::to_vertex("D1");  // endpoints map to D0
  CHECK(has_code(StableMapType::check(m), errc::non_adjacent_image));

  auto m2 = chain_over_two();
  m2.vertex_map["C1"] = "D1";  // now edge 1 collapses wrongly: images D1, D1 vs edge (D0,D1)
  m2.edge_map[1] = EdgeImage::to_edge(0);
  CHECK(has_code(StableMapType::check(m2), errc::non_adjacent_image));

  auto m3 = chain_over_two();
  m3.edge_map.pop_back();
  CHECK(has_code(StableMapType::check(m3), errc::dangling_reference));

  auto m4 = chain_over_two();
  m4.edge_map[1] = EdgeImage::to_edge(7);
  CHECK(has_code(StableMapType::check(m4), errc::dangling_reference));
}

TEST_CASE("marking bijection is enforced") {
  auto m = chain_over_two();
  m.leg_map.erase("0");
  CHECK(has_code(StableMapType::check(m), errc::leg_mismatch));

  auto m2 = chain_over_two();
  m2.leg_map["0"] = "1";  // two source legs hit target leg 1
  CHECK(has_code(StableMapType::check(m2), errc::leg_mismatch));

  // A marking must ride along with its component's image.
  auto m3 = chain_over_two();
  std::swap(m3.target.legs[0].vertex, m3.target.legs[2].vertex);
  CHECK(has_code(StableMapType::check(m3), errc::leg_mismatch));
}

TEST_CASE("degree conservation detects imbalance") {
  auto m = chain_over_two();
  m.degree["C0b"] = 1;
  m.behavior["C0b"] = Behavior::separable();
  auto type = StableMapType::validate(m);
  auto deg = type.degree_conservation();
  CHECK_FALSE(deg.conserved);
  CHECK(deg.sums.at("D1") == 1);
}

TEST_CASE("map stability flags contracted components with too few special points") {
  auto m = chain_over_two();
  // Drop the markings from C0b's image chain and contract a rational tail:
  // a contracted g=0 vertex with only one node violates the 3-point rule.
  m.source.vertices.push_back({"T", 0});
  m.source.edges.push_back({"C0b", "T"});
  m.vertex_map["T"] = "D1";
  m.edge_map.push_back(EdgeImage::to_vertex("D1"));
  m.degree["T"] = 0;
  m.behavior["T"] = Behavior::contracted();
  auto type = StableMapType::validate(m);
  auto stab = type.map_stability();
  CHECK_FALSE(stab.stable);
  CHECK(stab.failing == std::vector<std::string>{"T"});
}

TEST_CASE("genus annotation must match the source graph") {
  auto m = chain_over_two();
  m.genus = 2;
  CHECK(has_code(StableMapType::check(m), errc::invalid_genus));
  m.genus.reset();
  CHECK(StableMapType::check(m).empty());
}

TEST_CASE("riemann-hurwitz genus for simple branching") {
  CHECK(riemann_hurwitz_genus(2, 0, 4) == 1);
  CHECK(riemann_hurwitz_genus(3, 0, 4) == 0);
  CHECK(riemann_hurwitz_genus(2, 1, 2) == 2);
  CHECK(riemann_hurwitz_genus(1, 0, 0) == 0);
  CHECK(riemann_hurwitz_genus(5, 0, 8) == 0);
  CHECK(riemann_hurwitz_genus(2, 0, 6) == 2);

  try {
    riemann_hurwitz_genus(2, 0, 3);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::parity_error);
  }
  try {
    riemann_hurwitz_genus(2, 0, 0);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::negative_genus);
  }
  try {
    riemann_hurwitz_genus(3, 0, 0);  // -6: even but below -2
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::negative_genus);
  }
}
