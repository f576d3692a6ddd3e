#pragma once

#include <optional>

#include "hf/dual_graph.hpp"

namespace hf {

// How a source component maps to its image: contracted to a point, a
// separable cover, or an inseparable cover of the recorded degree. Only the
// inseparable degree is tracked; nothing is asserted about how the map
// factors beyond that.
enum class BehaviorKind { Contracted, Separable, Inseparable };

struct Behavior {
  BehaviorKind kind = BehaviorKind::Separable;
  int insep_degree = 0;  // meaningful only when kind == Inseparable; >= 2 then

  static Behavior contracted() { return {BehaviorKind::Contracted, 0}; }
  static Behavior separable() { return {BehaviorKind::Separable, 0}; }
  static Behavior inseparable(int degree) { return {BehaviorKind::Inseparable, degree}; }

  friend bool operator==(const Behavior& x, const Behavior& y) {
    return x.kind == y.kind && x.insep_degree == y.insep_degree;
  }
};

// Image of one source edge: either a target edge (by index into the target
// edge list) or a single target vertex when the edge is collapsed.
struct EdgeImage {
  enum Kind { ToEdge, ToVertex } kind = ToEdge;
  std::size_t edge_index = 0;
  std::string vertex_id;

  static EdgeImage to_edge(std::size_t index) { return {ToEdge, index, {}}; }
  static EdgeImage to_vertex(std::string id) { return {ToVertex, 0, std::move(id)}; }

  friend bool operator==(const EdgeImage& x, const EdgeImage& y) {
    if (x.kind != y.kind) return false;
    return x.kind == ToEdge ? x.edge_index == y.edge_index : x.vertex_id == y.vertex_id;
  }
};

// Combinatorial type of a map of nodal pointed curves. edge_map lines up
// with source.edges by position.
struct StableMapData {
  GraphData source;
  GraphData target;
  std::map<std::string, std::string> vertex_map;
  std::vector<EdgeImage> edge_map;
  std::map<std::string, std::string> leg_map;
  std::map<std::string, int> degree;
  std::map<std::string, Behavior> behavior;
  int total_degree = 0;
  std::optional<int> genus;  // annotation; must match the source graph when present
};

struct DegreeReport {
  bool conserved = true;
  // Per target vertex: sum of source degrees above it.
  std::map<std::string, int> sums;
};

struct MapStabilityReport {
  bool stable = true;
  // Contracted vertices violating 2g - 2 + special_count > 0.
  std::vector<std::string> failing;
};

struct FinitenessAttributes {
  bool is_finite = true;             // no contracted component
  bool has_inseparable_part = false; // some inseparable component
};

class StableMapType {
public:
  static std::vector<Violation> check(const StableMapData& data);
  static StableMapType validate(StableMapData data);

  const StableMapData& data() const { return data_; }
  const DualGraph& source() const { return source_; }
  const DualGraph& target() const { return target_; }

  DegreeReport degree_conservation() const;
  MapStabilityReport map_stability() const;
  FinitenessAttributes finiteness() const;

private:
  StableMapType(StableMapData data, DualGraph source, DualGraph target);

  StableMapData data_;
  DualGraph source_;
  DualGraph target_;
};

// Genus of a degree-d cover of a genus-h curve with n simple branch points:
// 2g - 2 = n + (2h - 2) d. Throws parity_error when the right side is odd
// and negative_genus when it falls below -2.
int riemann_hurwitz_genus(int degree, int target_genus, int branch_points);

// Canonical rendering of a map type, invariant under renaming of source and
// target vertex ids. Leg labels are semantic and are kept verbatim. Works by
// minimising over vertex orderings, so both graphs are capped at 8 vertices;
// beyond that it throws scale_cap.
std::string type_fingerprint(const StableMapType& type);

// Equality of map types up to renaming vertex ids on both sides.
bool equivalent_types(const StableMapType& x, const StableMapType& y);

}  // namespace hf
