#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>

#include "hf/field.hpp"
#include "hf/stable_map.hpp"

namespace hf {

// A geometric point of the characteristic-2 boundary, recorded by the two
// coordinates that cut out its home: where lambda degenerates and where j
// sits. Both coordinates live on the projective line over one field of
// characteristic 2.
struct H24Point {
  P1Point lambda_s;
  P1Point j_s;

  H24Point(P1Point lambda, P1Point j);

  const FieldPtr& field() const { return lambda_s.field(); }
};

// The four shapes a limit map can take. Case1 keeps lambda generic and needs
// j = 0; the others sit over a degenerate lambda and are told apart by j
// (generic, infinite, zero).
enum class CaseId { Case1 = 1, Case2, Case3, Case4 };

// Boundary components a point can lie on: the j = 0 locus and the three
// lambda-degeneration loci.
enum class ComponentId { J0, Lambda0, Lambda1, LambdaInf };

const char* case_name(CaseId id);
const char* component_name(ComponentId id);

// Checks re-run on every produced map; all three booleans must come out true.
struct Certificates {
  bool genus_check = false;      // source genus 1 over a genus-0 target
  bool stability_check = false;  // pointed stability on both sides + map stability
  bool degree_check = false;     // every target vertex sees total degree 2
  FinitenessAttributes finiteness_attributes;  // expected {false, true}
};

struct ClassificationResult {
  H24Point point;
  CaseId case_id;
  StableMapType map_type;
  std::set<ComponentId> components;
  Certificates certificates;
  // Case1 only: the point of the degenerate plane model where the contracted
  // genus-1 component is attached.
  std::optional<std::pair<FieldElem, FieldElem>> attaching_point;
};

// Which boundary components the point lies on. Empty exactly when the point
// is off the boundary; never throws for a well-formed point.
std::set<ComponentId> component_membership(const H24Point& point);

// Builds the limit stable map over the point and certifies it. Throws
// not_on_fiber when component_membership is empty.
ClassificationResult classify(const H24Point& point);

// A permutation of the four marking labels "0", "1", "inf", "lambda",
// written as a complete label -> label map.
using LabelPermutation = std::map<std::string, std::string>;

// Where the lambda coordinate moves when the four markings are relabelled by
// sigma: the cross-ratio of the permuted configuration. Collapsing pairs are
// handled projectively, so boundary values map to boundary values. The action
// factors through S3: the double transpositions fix every lambda.
P1Point lambda_image(const P1Point& lambda, const LabelPermutation& sigma);

// Relabels the markings of a classified map by sigma and reclassifies: the
// output is the classification of the translated point, with leg labels
// permuted in place.
ClassificationResult s4_relabel(const ClassificationResult& result, const LabelPermutation& sigma);

// Deterministic Graphviz rendering: source graph on top, target below,
// dashed arrows for the vertex map, double circles for contracted
// components, an F^2 tag on inseparable ones. Byte-identical for equal
// inputs.
std::string render_dot(const ClassificationResult& result);

}  // namespace hf
