#include "hf/dual_graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace hf {

namespace {

struct Dsu {
  std::vector<std::size_t> parent;
  explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

std::vector<Violation> DualGraph::check(const GraphData& data) {
  std::vector<Violation> out;

  if (data.vertices.empty()) {
    out.push_back({errc::disconnected, "", "graph has no vertices"});
    return out;
  }

  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < data.vertices.size(); ++i) {
    const auto& v = data.vertices[i];
    if (v.genus < 0) {
      out.push_back({errc::invalid_genus, v.id,
                     "vertex " + v.id + " has negative genus " + std::to_string(v.genus)});
    }
    if (!index.emplace(v.id, i).second) {
      out.push_back({errc::duplicate_vertex, v.id, "vertex id " + v.id + " appears twice"});
    }
  }

  for (std::size_t e = 0; e < data.edges.size(); ++e) {
    for (const std::string* end : {&data.edges[e].a, &data.edges[e].b}) {
      if (!index.count(*end)) {
        out.push_back({errc::dangling_reference, *end,
                       "edge " + std::to_string(e) + " references missing vertex " + *end});
      }
    }
  }

  std::set<std::string> labels;
  for (const auto& leg : data.legs) {
    if (!labels.insert(leg.label).second) {
      out.push_back(
          {errc::duplicate_marking, leg.label, "marking " + leg.label + " appears twice"});
    }
    if (!index.count(leg.vertex)) {
      out.push_back({errc::dangling_reference, leg.vertex,
                     "leg " + leg.label + " references missing vertex " + leg.vertex});
    }
  }

  // Connectivity only makes sense once references resolve.
  bool refs_ok = std::none_of(out.begin(), out.end(), [](const Violation& v) {
    return v.code == errc::dangling_reference || v.code == errc::duplicate_vertex;
  });
  if (refs_ok) {
    Dsu dsu(data.vertices.size());
    for (const auto& e : data.edges) dsu.unite(index.at(e.a), index.at(e.b));
    std::size_t root = dsu.find(0);
    for (std::size_t i = 1; i < data.vertices.size(); ++i) {
      if (dsu.find(i) != root) {
        out.push_back({errc::disconnected, data.vertices[i].id,
                       "vertex " + data.vertices[i].id + " is not reachable from " +
                           data.vertices[0].id});
        break;
      }
    }
  }
  return out;
}

DualGraph DualGraph::validate(GraphData data) {
  auto violations = check(data);
  if (!violations.empty()) {
    std::string msg;
    for (const auto& v : violations) {
      if (!msg.empty()) msg += "; ";
      msg += v.message;
    }
    raise(violations.front().code, msg);
  }
  return DualGraph(std::move(data));
}

DualGraph::DualGraph(GraphData data) : data_(std::move(data)) {
  for (std::size_t i = 0; i < data_.vertices.size(); ++i) index_[data_.vertices[i].id] = i;
}

const GraphVertex& DualGraph::vertex(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) raise(errc::dangling_reference, "no vertex named " + id);
  return data_.vertices[it->second];
}

int DualGraph::valence(const std::string& id) const {
  (void)vertex(id);
  int n = 0;
  for (const auto& e : data_.edges) {
    if (e.a == id) ++n;
    if (e.b == id) ++n;
  }
  return n;
}

int DualGraph::leg_count(const std::string& id) const {
  (void)vertex(id);
  int n = 0;
  for (const auto& l : data_.legs) {
    if (l.vertex == id) ++n;
  }
  return n;
}

int DualGraph::special_count(const std::string& id) const { return valence(id) + leg_count(id); }

int DualGraph::arithmetic_genus() const {
  int genus_sum = 0;
  for (const auto& v : data_.vertices) genus_sum += v.genus;
  return genus_sum + static_cast<int>(data_.edges.size()) -
         static_cast<int>(data_.vertices.size()) + 1;
}

StabilityReport DualGraph::pointed_stability() const {
  StabilityReport report;
  for (const auto& v : data_.vertices) {
    if (2 * v.genus - 2 + special_count(v.id) <= 0) {
      report.stable = false;
      report.failing.push_back(v.id);
    }
  }
  return report;
}

DualGraph DualGraph::relabel_vertices(const std::map<std::string, std::string>& renaming) const {
  auto rename = [&](const std::string& id) {
    auto it = renaming.find(id);
    return it == renaming.end() ? id : it->second;
  };
  GraphData out = data_;
  for (auto& v : out.vertices) v.id = rename(v.id);
  for (auto& e : out.edges) {
    e.a = rename(e.a);
    e.b = rename(e.b);
  }
  for (auto& l : out.legs) l.vertex = rename(l.vertex);
  return validate(std::move(out));
}

DualGraph DualGraph::relabel_legs(const std::map<std::string, std::string>& renaming) const {
  auto rename = [&](const std::string& label) {
    auto it = renaming.find(label);
    return it == renaming.end() ? label : it->second;
  };
  GraphData out = data_;
  for (auto& l : out.legs) l.label = rename(l.label);
  return validate(std::move(out));
}

DualGraph DualGraph::contract_edge(std::size_t edge_index) const {
  if (edge_index >= data_.edges.size()) {
    raise(errc::dangling_reference, "no edge with index " + std::to_string(edge_index));
  }
  const GraphEdge target = data_.edges[edge_index];
  GraphData out;

  if (target.a == target.b) {
    // Loop: drop the edge, bump the genus.
    out = data_;
    out.edges.erase(out.edges.begin() + static_cast<std::ptrdiff_t>(edge_index));
    out.vertices[index_.at(target.a)].genus += 1;
    return validate(std::move(out));
  }

  const std::string keep = target.a, gone = target.b;
  for (const auto& v : data_.vertices) {
    if (v.id == gone) continue;
    GraphVertex nv = v;
    if (v.id == keep) nv.genus += data_.vertices[index_.at(gone)].genus;
    out.vertices.push_back(nv);
  }
  for (std::size_t e = 0; e < data_.edges.size(); ++e) {
    if (e == edge_index) continue;
    GraphEdge ne = data_.edges[e];
    if (ne.a == gone) ne.a = keep;
    if (ne.b == gone) ne.b = keep;
    out.edges.push_back(ne);
  }
  for (const auto& l : data_.legs) {
    GraphLeg nl = l;
    if (nl.vertex == gone) nl.vertex = keep;
    out.legs.push_back(nl);
  }
  return validate(std::move(out));
}

}  // namespace hf
