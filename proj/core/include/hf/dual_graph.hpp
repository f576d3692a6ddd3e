#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "hf/errors.hpp"

namespace hf {

// Dual graph of a nodal pointed curve: vertices are irreducible components
// with a geometric genus, edges are nodes (loops allowed, parallel edges
// allowed), legs are marked points.
struct GraphVertex {
  std::string id;
  int genus = 0;
};

struct GraphEdge {
  std::string a, b;  // unordered endpoints; a == b is a loop
};

struct GraphLeg {
  std::string label;
  std::string vertex;
};

struct GraphData {
  std::vector<GraphVertex> vertices;
  std::vector<GraphEdge> edges;
  std::vector<GraphLeg> legs;
};

struct StabilityReport {
  bool stable = true;
  // Vertices with 2g - 2 + (legs + edge endpoints) <= 0.
  std::vector<std::string> failing;
};

// A validated graph. Construction goes through validate()/check(); the
// invariants afterwards are: connected, vertex ids unique, genera >= 0,
// marking labels distinct, every referenced id exists.
class DualGraph {
public:
  static std::vector<Violation> check(const GraphData& data);
  // Throws Error with the first violation's code if any check fails.
  static DualGraph validate(GraphData data);

  const GraphData& data() const { return data_; }
  const std::vector<GraphVertex>& vertices() const { return data_.vertices; }
  const std::vector<GraphEdge>& edges() const { return data_.edges; }
  const std::vector<GraphLeg>& legs() const { return data_.legs; }

  bool has_vertex(const std::string& id) const { return index_.count(id) != 0; }
  const GraphVertex& vertex(const std::string& id) const;

  // Edge endpoints incident to the vertex; a loop counts twice.
  int valence(const std::string& id) const;
  int leg_count(const std::string& id) const;
  // valence + leg_count: the special points of the component.
  int special_count(const std::string& id) const;

  // Sum of vertex genera plus the first Betti number E - V + 1.
  int arithmetic_genus() const;

  // Pointed stability: every vertex needs 2g - 2 + special_count > 0.
  StabilityReport pointed_stability() const;

  // Rename vertices / markings through a bijection. Ids not present in the
  // mapping are kept. Throws on collisions introduced by the mapping.
  DualGraph relabel_vertices(const std::map<std::string, std::string>& renaming) const;
  DualGraph relabel_legs(const std::map<std::string, std::string>& renaming) const;

  // Contract one edge: a non-loop edge merges its endpoints (genera add),
  // a loop disappears and bumps its vertex's genus by one. Both preserve
  // the arithmetic genus.
  DualGraph contract_edge(std::size_t edge_index) const;

private:
  explicit DualGraph(GraphData data);

  GraphData data_;
  std::map<std::string, std::size_t> index_;
};

}  // namespace hf
