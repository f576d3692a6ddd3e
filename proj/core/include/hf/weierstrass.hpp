#pragma once

#include <cstdint>

#include "hf/field.hpp"

namespace hf {

// y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6 with nonzero discriminant.
// Construction rejects singular equations, so every instance is an elliptic
// curve.
class WeierstrassCurve {
 public:
  WeierstrassCurve(FieldElem a1, FieldElem a2, FieldElem a3, FieldElem a4, FieldElem a6);

  const FieldPtr& field() const { return a1_.field(); }
  const FieldElem& a1() const { return a1_; }
  const FieldElem& a2() const { return a2_; }
  const FieldElem& a3() const { return a3_; }
  const FieldElem& a4() const { return a4_; }
  const FieldElem& a6() const { return a6_; }
  const FieldElem& discriminant() const { return disc_; }

 private:
  FieldElem a1_, a2_, a3_, a4_, a6_;
  FieldElem disc_;
};

// j = c4^3 / discriminant. The b8 ingredient is expanded integrally as
// a1^2 a6 + 4 a2 a6 - a1 a3 a4 + a2 a3^2 - a4^2 (the identity
// 4 b8 = b2 b6 - b4^2 cleared of the division), so the value is right in
// every characteristic, including 2.
FieldElem weierstrass_j(const WeierstrassCurve& curve);

// Number of points over the base field, the affine solutions plus one at
// infinity, by exhaustive enumeration. Finite fields of order <= 2^16 only.
std::int64_t point_count(const WeierstrassCurve& curve);

// q + 1 - point_count.
std::int64_t trace_of_frobenius(const WeierstrassCurve& curve);

// True exactly when the trace vanishes mod p.
bool is_supersingular(const WeierstrassCurve& curve);

// Characteristic 2 only: the affine points where a1 x + a3 vanishes, i.e.
// the nontrivial 2-torsion visible over the base field. Ordinary curves
// have exactly one, supersingular curves none.
int two_torsion_count(const WeierstrassCurve& curve);

}  // namespace hf
