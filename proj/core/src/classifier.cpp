#include "hf/classifier.hpp"

#include <algorithm>
#include <vector>

#include "hf/field_io.hpp"
#include "hf/legendre.hpp"

namespace hf {

H24Point::H24Point(P1Point lambda, P1Point j)
    : lambda_s(std::move(lambda)), j_s(std::move(j)) {
  if (!lambda_s.field()->same_as(*j_s.field())) {
    raise(errc::field_mismatch, "lambda_s and j_s must live over one field");
  }
  if (lambda_s.field()->characteristic() != 2) {
    raise(errc::wrong_characteristic, "the boundary fiber lives in characteristic 2");
  }
}

const char* case_name(CaseId id) {
  switch (id) {
    case CaseId::Case1: return "Case1";
    case CaseId::Case2: return "Case2";
    case CaseId::Case3: return "Case3";
    case CaseId::Case4: return "Case4";
  }
  return "?";
}

const char* component_name(ComponentId id) {
  switch (id) {
    case ComponentId::J0: return "J0";
    case ComponentId::Lambda0: return "Lambda0";
    case ComponentId::Lambda1: return "Lambda1";
    case ComponentId::LambdaInf: return "LambdaInf";
  }
  return "?";
}

std::set<ComponentId> component_membership(const H24Point& point) {
  std::set<ComponentId> out;
  if (!point.j_s.is_infinity() && point.j_s.value().is_zero()) {
    out.insert(ComponentId::J0);
  }
  if (point.lambda_s.is_infinity()) {
    out.insert(ComponentId::LambdaInf);
  } else if (point.lambda_s.value().is_zero()) {
    out.insert(ComponentId::Lambda0);
  } else if (point.lambda_s.value().is_one()) {
    out.insert(ComponentId::Lambda1);
  }
  return out;
}

namespace {

bool lambda_is_degenerate(const std::set<ComponentId>& components) {
  return components.count(ComponentId::Lambda0) != 0 ||
         components.count(ComponentId::Lambda1) != 0 ||
         components.count(ComponentId::LambdaInf) != 0;
}

CaseId case_for(const H24Point& point, const std::set<ComponentId>& components) {
  if (!lambda_is_degenerate(components)) return CaseId::Case1;
  if (components.count(ComponentId::J0) != 0) return CaseId::Case4;
  return point.j_s.is_infinity() ? CaseId::Case3 : CaseId::Case2;
}

// Actual marking labels for the four slots of the reference shapes. The
// shapes are written for lambda_s = 0; the other two degenerations are the
// same picture with "0" traded for the colliding label.
struct SlotLabels {
  std::string l0 = "0", l1 = "1", linf = "inf", llam = "lambda";
};

SlotLabels slot_labels(const std::set<ComponentId>& components) {
  SlotLabels lab;
  if (components.count(ComponentId::Lambda1) != 0) std::swap(lab.l0, lab.l1);
  if (components.count(ComponentId::LambdaInf) != 0) std::swap(lab.l0, lab.linf);
  return lab;
}

void sort_legs(GraphData& g) {
  std::sort(g.legs.begin(), g.legs.end(),
            [](const GraphLeg& x, const GraphLeg& y) { return x.label < y.label; });
}

void identity_leg_map(StableMapData& d) {
  for (const auto& leg : d.source.legs) d.leg_map[leg.label] = leg.label;
}

// Target for the degenerate-lambda cases: two lines meeting at one node, the
// colliding pair of markings on one side, the other pair across the node.
StableMapData degenerate_target(const SlotLabels& lab) {
  StableMapData d;
  d.target.vertices = {{"D0", 0}, {"D1", 0}};
  d.target.edges = {{"D0", "D1"}};
  d.target.legs = {{lab.l0, "D0"}, {lab.llam, "D0"}, {lab.l1, "D1"}, {lab.linf, "D1"}};
  sort_legs(d.target);
  d.total_degree = 2;
  d.genus = 1;
  return d;
}

// Generic lambda, j = 0: an inseparable double cover of the marked line with
// a contracted genus-1 tail.
StableMapData case1_data() {
  StableMapData d;
  d.source.vertices = {{"C0", 0}, {"C1", 1}};
  d.source.edges = {{"C0", "C1"}};
  d.source.legs = {{"0", "C0"}, {"1", "C0"}, {"inf", "C0"}, {"lambda", "C0"}};
  d.target.vertices = {{"D0", 0}};
  d.target.legs = {{"0", "D0"}, {"1", "D0"}, {"inf", "D0"}, {"lambda", "D0"}};
  d.vertex_map = {{"C0", "D0"}, {"C1", "D0"}};
  d.edge_map = {EdgeImage::to_vertex("D0")};
  d.degree = {{"C0", 2}, {"C1", 0}};
  d.behavior = {{"C0", Behavior::inseparable(2)}, {"C1", Behavior::contracted()}};
  d.total_degree = 2;
  d.genus = 1;
  identity_leg_map(d);
  return d;
}

// Degenerate lambda, generic j: two inseparable halves joined through a
// contracted genus-1 middle sitting over the node.
StableMapData case2_data(const SlotLabels& lab) {
  StableMapData d = degenerate_target(lab);
  d.source.vertices = {{"C0a", 0}, {"C1", 1}, {"C0b", 0}};
  d.source.edges = {{"C0a", "C1"}, {"C1", "C0b"}};
  d.source.legs = {{lab.l0, "C0a"}, {lab.llam, "C0a"}, {lab.l1, "C0b"}, {lab.linf, "C0b"}};
  sort_legs(d.source);
  d.vertex_map = {{"C0a", "D0"}, {"C1", "D0"}, {"C0b", "D1"}};
  d.edge_map = {EdgeImage::to_vertex("D0"), EdgeImage::to_edge(0)};
  d.degree = {{"C0a", 2}, {"C1", 0}, {"C0b", 2}};
  d.behavior = {{"C0a", Behavior::inseparable(2)},
                {"C1", Behavior::contracted()},
                {"C0b", Behavior::inseparable(2)}};
  identity_leg_map(d);
  return d;
}

// Degenerate lambda, j = infinity: the genus moved into a cycle, so the
// middle is a banana of two contracted lines over the node, one inseparable
// tail on each side.
StableMapData case3_data(const SlotLabels& lab) {
  StableMapData d = degenerate_target(lab);
  d.source.vertices = {{"C0a", 0}, {"C1a", 0}, {"C1b", 0}, {"C0b", 0}};
  d.source.edges = {{"C0a", "C1a"}, {"C1a", "C1b"}, {"C1a", "C1b"}, {"C1b", "C0b"}};
  d.source.legs = {{lab.l0, "C0a"}, {lab.llam, "C0a"}, {lab.l1, "C0b"}, {lab.linf, "C0b"}};
  sort_legs(d.source);
  d.vertex_map = {{"C0a", "D0"}, {"C1a", "D0"}, {"C1b", "D1"}, {"C0b", "D1"}};
  d.edge_map = {EdgeImage::to_vertex("D0"), EdgeImage::to_edge(0), EdgeImage::to_edge(0),
                EdgeImage::to_vertex("D1")};
  d.degree = {{"C0a", 2}, {"C1a", 0}, {"C1b", 0}, {"C0b", 2}};
  d.behavior = {{"C0a", Behavior::inseparable(2)},
                {"C1a", Behavior::contracted()},
                {"C1b", Behavior::contracted()},
                {"C0b", Behavior::inseparable(2)}};
  identity_leg_map(d);
  return d;
}

// Degenerate lambda, j = 0: the genus-1 component survives but hangs off a
// contracted line that carries the three-way junction.
StableMapData case4_data(const SlotLabels& lab) {
  StableMapData d = degenerate_target(lab);
  d.source.vertices = {{"C1", 1}, {"C0p", 0}, {"C0a", 0}, {"C0b", 0}};
  d.source.edges = {{"C1", "C0p"}, {"C0p", "C0a"}, {"C0p", "C0b"}};
  d.source.legs = {{lab.l0, "C0a"}, {lab.llam, "C0a"}, {lab.l1, "C0b"}, {lab.linf, "C0b"}};
  sort_legs(d.source);
  d.vertex_map = {{"C1", "D0"}, {"C0p", "D0"}, {"C0a", "D0"}, {"C0b", "D1"}};
  d.edge_map = {EdgeImage::to_vertex("D0"), EdgeImage::to_vertex("D0"), EdgeImage::to_edge(0)};
  d.degree = {{"C1", 0}, {"C0p", 0}, {"C0a", 2}, {"C0b", 2}};
  d.behavior = {{"C1", Behavior::contracted()},
                {"C0p", Behavior::contracted()},
                {"C0a", Behavior::inseparable(2)},
                {"C0b", Behavior::inseparable(2)}};
  identity_leg_map(d);
  return d;
}

Certificates certify(const StableMapType& type) {
  Certificates c;
  const int expected = riemann_hurwitz_genus(2, 0, 4);
  c.genus_check = type.source().arithmetic_genus() == expected &&
                  type.target().arithmetic_genus() == 0;
  c.stability_check = type.source().pointed_stability().stable &&
                      type.target().pointed_stability().stable && type.map_stability().stable;
  c.degree_check = type.degree_conservation().conserved && type.data().total_degree == 2;
  c.finiteness_attributes = type.finiteness();
  return c;
}

void require_certified(const Certificates& c) {
  if (!c.genus_check || !c.stability_check || !c.degree_check ||
      c.finiteness_attributes.is_finite || !c.finiteness_attributes.has_inseparable_part) {
    raise(errc::invalid_behavior, "internal: produced map failed certification");
  }
}

void require_label_permutation(const LabelPermutation& sigma) {
  static const std::set<std::string> all = {"0", "1", "inf", "lambda"};
  std::set<std::string> keys, values;
  for (const auto& [k, v] : sigma) {
    keys.insert(k);
    values.insert(v);
  }
  if (keys != all || values != all) {
    raise(errc::usage_error,
          "a label permutation must map {0, 1, inf, lambda} onto itself");
  }
}

// A point of the projective line in homogeneous coordinates.
struct Hom {
  FieldElem x, z;
};

FieldElem det(const Hom& p, const Hom& q) { return p.x * q.z - q.x * p.z; }

}  // namespace

P1Point lambda_image(const P1Point& lambda, const LabelPermutation& sigma) {
  require_label_permutation(sigma);
  const FieldPtr& f = lambda.field();
  const FieldElem zero = f->zero(), one = f->one();
  std::map<std::string, Hom> placed = {
      {"0", {zero, one}},
      {"1", {one, one}},
      {"inf", {one, zero}},
      {"lambda", lambda.is_infinity() ? Hom{one, zero} : Hom{lambda.value(), one}},
  };
  // Slot l of the relabelled configuration holds the point that was labelled
  // sigma^{-1}(l); the new lambda is the cross-ratio of the four slots.
  std::map<std::string, std::string> inverse;
  for (const auto& [k, v] : sigma) inverse[v] = k;
  const Hom a = placed.at(inverse.at("0"));
  const Hom b = placed.at(inverse.at("1"));
  const Hom c = placed.at(inverse.at("inf"));
  const Hom d = placed.at(inverse.at("lambda"));
  return p1_normalize(det(d, a) * det(b, c), det(d, c) * det(b, a));
}

ClassificationResult classify(const H24Point& point) {
  std::set<ComponentId> components = component_membership(point);
  if (components.empty()) {
    raise(errc::not_on_fiber,
          "(" + format_p1(point.lambda_s) + ", " + format_p1(point.j_s) +
              ") lies on no boundary component: lambda_s must degenerate or j_s vanish");
  }
  const CaseId id = case_for(point, components);
  StableMapData data;
  switch (id) {
    case CaseId::Case1: data = case1_data(); break;
    case CaseId::Case2: data = case2_data(slot_labels(components)); break;
    case CaseId::Case3: data = case3_data(slot_labels(components)); break;
    case CaseId::Case4: data = case4_data(slot_labels(components)); break;
  }
  ClassificationResult result{point, id, StableMapType::validate(std::move(data)),
                              std::move(components), Certificates{}, std::nullopt};
  result.certificates = certify(result.map_type);
  require_certified(result.certificates);
  if (id == CaseId::Case1) {
    result.attaching_point = char2_singular_point(LegendreCurve(point.lambda_s.value()));
  }
  return result;
}

ClassificationResult s4_relabel(const ClassificationResult& result, const LabelPermutation& sigma) {
  require_label_permutation(sigma);
  H24Point moved(lambda_image(result.point.lambda_s, sigma), result.point.j_s);

  StableMapData d = result.map_type.data();
  for (auto& leg : d.source.legs) leg.label = sigma.at(leg.label);
  for (auto& leg : d.target.legs) leg.label = sigma.at(leg.label);
  sort_legs(d.source);
  sort_legs(d.target);
  std::map<std::string, std::string> moved_legs;
  for (const auto& [s, t] : d.leg_map) moved_legs[sigma.at(s)] = sigma.at(t);
  d.leg_map = std::move(moved_legs);

  // A contracted cluster sitting over the target node is recorded over one
  // endpoint, canonically the one carrying the lambda marking. Relabelling
  // may move that marking across the node, so the cluster follows it and the
  // edge images are recomputed. The banana shape is exempt: its two
  // contracted halves stay split across the node, and swapping them is a
  // plain renaming.
  if (!d.target.edges.empty() && result.case_id != CaseId::Case3) {
    std::string lambda_side;
    for (const auto& leg : d.target.legs) {
      if (leg.label == "lambda") lambda_side = leg.vertex;
    }
    bool moved_cluster = false;
    for (const auto& v : d.source.vertices) {
      if (d.behavior.at(v.id).kind != BehaviorKind::Contracted) continue;
      if (d.vertex_map.at(v.id) != lambda_side) {
        d.vertex_map[v.id] = lambda_side;
        moved_cluster = true;
      }
    }
    if (moved_cluster) {
      for (std::size_t i = 0; i < d.source.edges.size(); ++i) {
        const std::string& ia = d.vertex_map.at(d.source.edges[i].a);
        const std::string& ib = d.vertex_map.at(d.source.edges[i].b);
        d.edge_map[i] = ia == ib ? EdgeImage::to_vertex(ia) : EdgeImage::to_edge(0);
      }
    }
  }

  std::set<ComponentId> components = component_membership(moved);
  ClassificationResult out{moved, case_for(moved, components), StableMapType::validate(std::move(d)),
                           std::move(components), Certificates{}, std::nullopt};
  out.certificates = certify(out.map_type);
  require_certified(out.certificates);
  if (out.case_id == CaseId::Case1) {
    out.attaching_point = char2_singular_point(LegendreCurve(moved.lambda_s.value()));
  }
  return out;
}

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  out += '"';
  return out;
}

std::string leg_line(const GraphData& g, const std::string& vertex) {
  std::string out;
  for (const auto& leg : g.legs) {
    if (leg.vertex != vertex) continue;
    if (!out.empty()) out += ", ";
    out += leg.label;
  }
  return out.empty() ? out : "\\nlegs " + out;
}

}  // namespace

std::string render_dot(const ClassificationResult& result) {
  const StableMapData& d = result.map_type.data();
  std::string out = "digraph stable_map_type {\n";
  out += "  rankdir=TB;\n";
  out += "  labelloc=\"t\";\n";
  out += "  label=\"" + std::string(case_name(result.case_id)) + ": lambda_s = " +
         format_p1(result.point.lambda_s) + ", j_s = " + format_p1(result.point.j_s) + "\";\n";

  out += "  subgraph cluster_source {\n    label=\"source\";\n";
  for (const auto& v : d.source.vertices) {
    const Behavior& b = d.behavior.at(v.id);
    std::string shape = b.kind == BehaviorKind::Contracted ? "doublecircle" : "ellipse";
    std::string text = v.id + "\\ngenus " + std::to_string(v.genus);
    switch (b.kind) {
      case BehaviorKind::Contracted: text += "\\ncontracted"; break;
      case BehaviorKind::Separable: text += "\\ndegree " + std::to_string(d.degree.at(v.id)); break;
      case BehaviorKind::Inseparable:
        text += "\\nF\u00b2 degree " + std::to_string(b.insep_degree);
        break;
    }
    text += leg_line(d.source, v.id);
    out += "    " + dot_quote("src_" + v.id) + " [shape=" + shape + ", label=" + dot_quote(text) + "];\n";
  }
  for (const auto& e : d.source.edges) {
    out += "    " + dot_quote("src_" + e.a) + " -> " + dot_quote("src_" + e.b) + " [dir=none];\n";
  }
  out += "  }\n";

  out += "  subgraph cluster_target {\n    label=\"target\";\n";
  for (const auto& w : d.target.vertices) {
    std::string text = w.id + "\\ngenus " + std::to_string(w.genus) + leg_line(d.target, w.id);
    out += "    " + dot_quote("tgt_" + w.id) + " [shape=ellipse, label=" + dot_quote(text) + "];\n";
  }
  for (const auto& e : d.target.edges) {
    out += "    " + dot_quote("tgt_" + e.a) + " -> " + dot_quote("tgt_" + e.b) + " [dir=none];\n";
  }
  out += "  }\n";

  for (const auto& v : d.source.vertices) {
    out += "  " + dot_quote("src_" + v.id) + " -> " + dot_quote("tgt_" + d.vertex_map.at(v.id)) +
           " [style=dashed];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace hf
