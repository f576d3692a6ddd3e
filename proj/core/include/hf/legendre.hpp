#pragma once

#include <utility>
#include <vector>

#include "hf/field.hpp"
#include "hf/polynomial.hpp"

namespace hf {

// The plane curve y^2 = x(x-1)(x-lambda); lambda must avoid 0 and 1 so the
// three finite branch values stay distinct.
class LegendreCurve {
 public:
  explicit LegendreCurve(FieldElem lambda);

  const FieldElem& lambda() const { return lambda_; }
  const FieldPtr& field() const { return lambda_.field(); }
  // y^2 - x(x-1)(x-lambda) as an exact polynomial; over characteristic 2
  // this is y^2 + x(x+1)(x+lambda).
  Poly2 plane_equation() const;

 private:
  FieldElem lambda_;
};

// j = 256 (lambda^2 - lambda + 1)^3 / (lambda^2 (lambda - 1)^2), defined away
// from characteristic 2.
FieldElem j_from_lambda(const FieldElem& lambda);

// The six values lambda, 1-lambda, 1/lambda, 1/(1-lambda), (lambda-1)/lambda,
// lambda/(lambda-1), in that order and with repetitions kept.
std::vector<FieldElem> lambda_orbit(const FieldElem& lambda);

// The unique non-smooth point of the characteristic-2 model, (sqrt(lambda),
// lambda + sqrt(lambda)). Before returning, the point is certified: the
// equation and its x-partial vanish there, the y-partial vanishes
// identically, no other affine point is singular, and the point at infinity
// on the projective closure is smooth.
std::pair<FieldElem, FieldElem> char2_singular_point(const LegendreCurve& curve);

enum class SingularityType { Node, NonNode };

// Classifies the singular point by its tangent cone: two distinct tangent
// directions make a node, a repeated direction does not. In characteristic 2
// the quadratic part at the singular point is a perfect square, so the
// answer is NonNode; a smooth curve (any valid lambda away from
// characteristic 2) raises NotSingular.
SingularityType singularity_type(const LegendreCurve& curve);

// The two involutions of the x-line swapping branch values in pairs:
// Inv is x -> lambda/x (swaps 0 with infinity and 1 with lambda), Cross is
// x -> (x-1)/(lambda^{-1} x - 1) (swaps 0 with 1 and lambda with infinity).
enum class InvolutionKind { Inv, Cross };

// Fixed points of the chosen involution on the projective x-line, sorted.
// Solutions are taken in lambda's field when they exist there; otherwise,
// for finite fields of odd characteristic whose quadratic extension stays
// inside the supported sizes, coordinates come from that extension. Over the
// rationals an irrational fixed point is reported as absent.
std::vector<P1Point> fixed_points(InvolutionKind which, const FieldElem& lambda);

}  // namespace hf
