#include "hf/stable_map.hpp"

#include <algorithm>
#include <set>

namespace hf {

namespace {

void prefix_violations(std::vector<Violation>& out, const std::vector<Violation>& in,
                       const std::string& side) {
  for (const auto& v : in) {
    out.push_back({v.code, side + ":" + v.element, side + " graph: " + v.message});
  }
}

}  // namespace

std::vector<Violation> StableMapType::check(const StableMapData& data) {
  std::vector<Violation> out;
  prefix_violations(out, DualGraph::check(data.source), "source");
  prefix_violations(out, DualGraph::check(data.target), "target");
  if (!out.empty()) return out;  // map checks need well-formed graphs

  const DualGraph source = DualGraph::validate(data.source);
  const DualGraph target = DualGraph::validate(data.target);

  if (data.total_degree < 0) {
    out.push_back({errc::invalid_behavior, "total_degree", "total degree is negative"});
  }

  for (const auto& v : data.source.vertices) {
    auto vm = data.vertex_map.find(v.id);
    if (vm == data.vertex_map.end()) {
      out.push_back({errc::dangling_reference, v.id, "vertex " + v.id + " has no image"});
      continue;
    }
    if (!target.has_vertex(vm->second)) {
      out.push_back({errc::dangling_reference, v.id,
                     "vertex " + v.id + " maps to missing vertex " + vm->second});
    }
  }
  for (const auto& [from, to] : data.vertex_map) {
    if (!source.has_vertex(from)) {
      out.push_back(
          {errc::dangling_reference, from, "vertex_map names missing source vertex " + from});
    }
    (void)to;
  }

  for (const auto& v : data.source.vertices) {
    auto deg = data.degree.find(v.id);
    if (deg == data.degree.end()) {
      out.push_back({errc::dangling_reference, v.id, "vertex " + v.id + " has no degree"});
      continue;
    }
    if (deg->second < 0) {
      out.push_back({errc::invalid_behavior, v.id, "vertex " + v.id + " has negative degree"});
    }
    auto beh = data.behavior.find(v.id);
    if (beh == data.behavior.end()) {
      out.push_back({errc::dangling_reference, v.id, "vertex " + v.id + " has no behavior"});
      continue;
    }
    const bool contracted = beh->second.kind == BehaviorKind::Contracted;
    if (contracted && deg->second != 0) {
      out.push_back({errc::contracted_with_degree, v.id,
                     "contracted vertex " + v.id + " has degree " +
                         std::to_string(deg->second)});
    }
    if (!contracted && deg->second == 0) {
      out.push_back({errc::contracted_with_degree, v.id,
                     "vertex " + v.id + " has degree 0 but is not contracted"});
    }
    if (beh->second.kind == BehaviorKind::Inseparable && beh->second.insep_degree < 2) {
      out.push_back({errc::invalid_behavior, v.id,
                     "inseparable vertex " + v.id + " needs inseparable degree >= 2"});
    }
  }

  if (data.edge_map.size() != data.source.edges.size()) {
    out.push_back({errc::dangling_reference, "edge_map",
                   "edge_map has " + std::to_string(data.edge_map.size()) + " entries for " +
                       std::to_string(data.source.edges.size()) + " source edges"});
  } else {
    for (std::size_t e = 0; e < data.edge_map.size(); ++e) {
      const auto& edge = data.source.edges[e];
      auto ia = data.vertex_map.find(edge.a);
      auto ib = data.vertex_map.find(edge.b);
      if (ia == data.vertex_map.end() || ib == data.vertex_map.end()) continue;  // reported above
      const std::string& wa = ia->second;
      const std::string& wb = ib->second;
      const EdgeImage& img = data.edge_map[e];
      const std::string name = "edge " + std::to_string(e) + " (" + edge.a + "," + edge.b + ")";
      if (img.kind == EdgeImage::ToVertex) {
        if (!target.has_vertex(img.vertex_id)) {
          out.push_back({errc::dangling_reference, name,
                         name + " collapses to missing vertex " + img.vertex_id});
        } else if (wa != img.vertex_id || wb != img.vertex_id) {
          out.push_back({errc::non_adjacent_image, name,
                         name + " collapses to " + img.vertex_id +
                             " but its endpoints map to " + wa + ", " + wb});
        }
      } else {
        if (img.edge_index >= data.target.edges.size()) {
          out.push_back({errc::dangling_reference, name,
                         name + " maps to missing target edge " +
                             std::to_string(img.edge_index)});
          continue;
        }
        const auto& te = data.target.edges[img.edge_index];
        const bool straight = (wa == te.a && wb == te.b);
        const bool flipped = (wa == te.b && wb == te.a);
        if (!straight && !flipped) {
          out.push_back({errc::non_adjacent_image, name,
                         name + " maps to target edge (" + te.a + "," + te.b +
                             ") but its endpoints map to " + wa + ", " + wb});
        }
      }
    }
  }

  // Legs: a bijection onto the target markings, compatible with vertex images.
  std::map<std::string, const GraphLeg*> source_legs, target_legs;
  for (const auto& l : data.source.legs) source_legs[l.label] = &l;
  for (const auto& l : data.target.legs) target_legs[l.label] = &l;
  std::set<std::string> hit;
  for (const auto& [from, to] : data.leg_map) {
    auto sl = source_legs.find(from);
    if (sl == source_legs.end()) {
      out.push_back({errc::leg_mismatch, from, "leg_map names missing source leg " + from});
      continue;
    }
    auto tl = target_legs.find(to);
    if (tl == target_legs.end()) {
      out.push_back({errc::leg_mismatch, from, "leg " + from + " maps to missing leg " + to});
      continue;
    }
    if (!hit.insert(to).second) {
      out.push_back({errc::leg_mismatch, to, "target leg " + to + " is hit twice"});
    }
    auto vm = data.vertex_map.find(sl->second->vertex);
    if (vm != data.vertex_map.end() && vm->second != tl->second->vertex) {
      out.push_back({errc::leg_mismatch, from,
                     "leg " + from + " sits on " + sl->second->vertex + " mapping to " +
                         vm->second + " but its image leg sits on " + tl->second->vertex});
    }
  }
  for (const auto& l : data.source.legs) {
    if (!data.leg_map.count(l.label)) {
      out.push_back({errc::leg_mismatch, l.label, "source leg " + l.label + " has no image"});
    }
  }
  if (hit.size() != target_legs.size() && data.leg_map.size() == source_legs.size()) {
    for (const auto& [label, leg] : target_legs) {
      (void)leg;
      if (!hit.count(label)) {
        out.push_back({errc::leg_mismatch, label, "target leg " + label + " is not hit"});
      }
    }
  }

  if (data.genus && source.arithmetic_genus() != *data.genus) {
    out.push_back({errc::invalid_genus, "genus",
                   "annotation says genus " + std::to_string(*data.genus) +
                       " but the source graph has genus " +
                       std::to_string(source.arithmetic_genus())});
  }

  return out;
}

StableMapType StableMapType::validate(StableMapData data) {
  auto violations = check(data);
  if (!violations.empty()) {
    std::string msg;
    for (const auto& v : violations) {
      if (!msg.empty()) msg += "; ";
      msg += v.message;
    }
    raise(violations.front().code, msg);
  }
  DualGraph source = DualGraph::validate(data.source);
  DualGraph target = DualGraph::validate(data.target);
  return StableMapType(std::move(data), std::move(source), std::move(target));
}

StableMapType::StableMapType(StableMapData data, DualGraph source, DualGraph target)
    : data_(std::move(data)), source_(std::move(source)), target_(std::move(target)) {}

DegreeReport StableMapType::degree_conservation() const {
  DegreeReport report;
  for (const auto& w : data_.target.vertices) report.sums[w.id] = 0;
  for (const auto& v : data_.source.vertices) {
    report.sums[data_.vertex_map.at(v.id)] += data_.degree.at(v.id);
  }
  for (const auto& [id, sum] : report.sums) {
    (void)id;
    if (sum != data_.total_degree) report.conserved = false;
  }
  return report;
}

MapStabilityReport StableMapType::map_stability() const {
  MapStabilityReport report;
  for (const auto& v : data_.source.vertices) {
    if (data_.behavior.at(v.id).kind != BehaviorKind::Contracted) continue;
    if (2 * v.genus - 2 + source_.special_count(v.id) <= 0) {
      report.stable = false;
      report.failing.push_back(v.id);
    }
  }
  return report;
}

FinitenessAttributes StableMapType::finiteness() const {
  FinitenessAttributes attrs;
  for (const auto& [id, b] : data_.behavior) {
    (void)id;
    if (b.kind == BehaviorKind::Contracted) attrs.is_finite = false;
    if (b.kind == BehaviorKind::Inseparable) attrs.has_inseparable_part = true;
  }
  return attrs;
}

namespace {

std::vector<std::vector<std::size_t>> orderings(std::size_t n) {
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  std::vector<std::vector<std::size_t>> out;
  do {
    out.push_back(idx);
  } while (std::next_permutation(idx.begin(), idx.end()));
  return out;
}

std::string behavior_tag(const Behavior& b) {
  switch (b.kind) {
    case BehaviorKind::Contracted: return "c";
    case BehaviorKind::Separable: return "s";
    case BehaviorKind::Inseparable: return "i" + std::to_string(b.insep_degree);
  }
  return "?";
}

// One rendering of the type under fixed vertex orderings. order_* maps the
// original vertex position to its rank in the chosen ordering.
std::string render_type(const StableMapData& d, const std::vector<std::size_t>& source_rank,
                        const std::vector<std::size_t>& target_rank) {
  std::map<std::string, std::size_t> source_pos, target_pos;
  for (std::size_t i = 0; i < d.source.vertices.size(); ++i) {
    source_pos[d.source.vertices[i].id] = source_rank[i];
  }
  for (std::size_t i = 0; i < d.target.vertices.size(); ++i) {
    target_pos[d.target.vertices[i].id] = target_rank[i];
  }
  auto leg_list = [](const GraphData& g, const std::string& id) {
    std::vector<std::string> labels;
    for (const auto& leg : g.legs) {
      if (leg.vertex == id) labels.push_back(leg.label);
    }
    std::sort(labels.begin(), labels.end());
    std::string out;
    for (const auto& l : labels) out += l + ",";
    return out;
  };
  auto target_edge_tag = [&](std::size_t index) {
    const auto& e = d.target.edges[index];
    std::size_t x = target_pos.at(e.a), y = target_pos.at(e.b);
    if (x > y) std::swap(x, y);
    return "e" + std::to_string(x) + "-" + std::to_string(y);
  };

  std::vector<std::string> source_lines(d.source.vertices.size());
  for (const auto& v : d.source.vertices) {
    source_lines[source_pos.at(v.id)] =
        "g" + std::to_string(v.genus) + " " + behavior_tag(d.behavior.at(v.id)) + " d" +
        std::to_string(d.degree.at(v.id)) + " ->t" +
        std::to_string(target_pos.at(d.vertex_map.at(v.id))) + " [" +
        leg_list(d.source, v.id) + "]";
  }
  std::vector<std::string> edge_lines;
  for (std::size_t i = 0; i < d.source.edges.size(); ++i) {
    const auto& e = d.source.edges[i];
    std::size_t x = source_pos.at(e.a), y = source_pos.at(e.b);
    if (x > y) std::swap(x, y);
    const EdgeImage& im = d.edge_map[i];
    std::string image = im.kind == EdgeImage::ToVertex ? "t" + std::to_string(target_pos.at(im.vertex_id))
                                                       : target_edge_tag(im.edge_index);
    edge_lines.push_back(std::to_string(x) + "-" + std::to_string(y) + "=>" + image);
  }
  std::sort(edge_lines.begin(), edge_lines.end());

  std::vector<std::string> target_lines(d.target.vertices.size());
  for (const auto& w : d.target.vertices) {
    target_lines[target_pos.at(w.id)] =
        "g" + std::to_string(w.genus) + " [" + leg_list(d.target, w.id) + "]";
  }
  std::vector<std::string> target_edge_lines;
  for (std::size_t i = 0; i < d.target.edges.size(); ++i) {
    target_edge_lines.push_back(target_edge_tag(i));
  }
  std::sort(target_edge_lines.begin(), target_edge_lines.end());

  std::string out = "deg" + std::to_string(d.total_degree);
  out += d.genus ? " genus" + std::to_string(*d.genus) : " genus-";
  out += "\nsource\n";
  for (const auto& line : source_lines) out += line + "\n";
  for (const auto& line : edge_lines) out += line + "\n";
  out += "target\n";
  for (const auto& line : target_lines) out += line + "\n";
  for (const auto& line : target_edge_lines) out += line + "\n";
  out += "legs\n";
  for (const auto& [s, t] : d.leg_map) out += s + "->" + t + "\n";
  return out;
}

}  // namespace

std::string type_fingerprint(const StableMapType& type) {
  const StableMapData& d = type.data();
  auto factorial = [](std::size_t n) {
    std::size_t f = 1;
    for (std::size_t i = 2; i <= n; ++i) f *= i;
    return f;
  };
  if (d.source.vertices.size() > 8 || d.target.vertices.size() > 8 ||
      factorial(d.source.vertices.size()) * factorial(d.target.vertices.size()) > 200000) {
    raise(errc::scale_cap, "fingerprint ordering search exceeds the cap");
  }
  const auto source_orders = orderings(d.source.vertices.size());
  const auto target_orders = orderings(d.target.vertices.size());
  std::string best;
  for (const auto& s : source_orders) {
    for (const auto& t : target_orders) {
      std::string candidate = render_type(d, s, t);
      if (best.empty() || candidate < best) best = std::move(candidate);
    }
  }
  return best;
}

bool equivalent_types(const StableMapType& x, const StableMapType& y) {
  return type_fingerprint(x) == type_fingerprint(y);
}

int riemann_hurwitz_genus(int degree, int target_genus, int branch_points) {
  if (degree < 1) raise(errc::invalid_behavior, "degree must be at least 1");
  if (target_genus < 0) raise(errc::invalid_genus, "target genus must be nonnegative");
  if (branch_points < 0) raise(errc::invalid_behavior, "branch point count must be nonnegative");
  const int rhs = branch_points + (2 * target_genus - 2) * degree;
  if ((rhs % 2 + 2) % 2 != 0) {
    raise(errc::parity_error, "2g - 2 = " + std::to_string(rhs) + " is odd");
  }
  if (rhs < -2) {
    raise(errc::negative_genus, "2g - 2 = " + std::to_string(rhs) + " forces negative genus");
  }
  return (rhs + 2) / 2;
}

}  // namespace hf
