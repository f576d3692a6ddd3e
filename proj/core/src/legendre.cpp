#include "hf/legendre.hpp"

#include <algorithm>

#include "hf/errors.hpp"

namespace hf {
namespace {

void require_nondegenerate(const FieldElem& lambda) {
  if (lambda.is_zero() || lambda.is_one())
    raise(errc::degenerate_lambda, "lambda must avoid 0 and 1");
}

// x -> (a x + b) / (c x + d) on the projective x-line.
struct Mobius {
  FieldElem a, b, c, d;

  P1Point apply(const P1Point& point) const {
    if (point.is_infinity()) return p1_normalize(a, c);
    const FieldElem& x = point.value();
    return p1_normalize(a * x + b, c * x + d);
  }
};

Mobius involution_map(InvolutionKind which, const FieldElem& lambda) {
  const FieldPtr& f = lambda.field();
  if (which == InvolutionKind::Inv) return {f->zero(), lambda, f->one(), f->zero()};
  return {f->one(), -f->one(), lambda.inv(), -f->one()};
}

// Lift an element of GF(p^k) into GF(p^(2k)) by sending the generator to the
// first root of the parent modulus there; a degree-k irreducible always
// splits in the degree-2k extension.
FieldElem embed(const FieldElem& e, const FieldPtr& big) {
  const FieldPtr& parent = e.field();
  if (parent->extension_degree() == 1) return big->from_integer(e.coeffs()[0]);
  const auto& mod = parent->modulus();
  FieldElem root = big->zero();
  bool found = false;
  for (std::int64_t i = 0; i < big->order() && !found; ++i) {
    const FieldElem r = big->element_at(i);
    FieldElem acc = big->zero();
    FieldElem power = big->one();
    for (const auto c : mod) {
      acc = acc + big->from_integer(c) * power;
      power = power * r;
    }
    if (acc.is_zero()) {
      root = r;
      found = true;
    }
  }
  if (!found) raise(errc::not_on_fiber, "internal: parent modulus has no root in the extension");
  FieldElem out = big->zero();
  FieldElem power = big->one();
  for (const auto c : e.coeffs()) {
    out = out + big->from_integer(c) * power;
    power = power * root;
  }
  return out;
}

std::vector<P1Point> fixed_points_over(const Mobius& map, const FieldPtr& field) {
  std::vector<P1Point> out;
  // infinity is fixed exactly when the map keeps it away from the finite line
  if (map.c.is_zero() && !map.a.is_zero()) out.push_back(P1Point::infinity(field));
  // finite fixed points solve c x^2 + (d - a) x - b = 0 after clearing the
  // denominator; clearing can only add roots at poles, so those are dropped
  for (const auto& x : solve_quadratic(map.c, map.d - map.a, -map.b))
    if (!(map.c * x + map.d).is_zero()) out.push_back(P1Point::finite(x));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

LegendreCurve::LegendreCurve(FieldElem lambda) : lambda_(std::move(lambda)) {
  require_nondegenerate(lambda_);
}

Poly2 LegendreCurve::plane_equation() const {
  const FieldPtr& f = field();
  const Poly2 x = Poly2::var_x(f);
  const Poly2 y = Poly2::var_y(f);
  const Poly2 one = Poly2::constant(f->one());
  return y * y - x * (x - one) * (x - Poly2::constant(lambda_));
}

FieldElem j_from_lambda(const FieldElem& lambda) {
  if (lambda.field()->characteristic() == 2)
    raise(errc::wrong_characteristic,
          "the lambda-to-j formula divides by 2; use the characteristic-2 analysis instead");
  require_nondegenerate(lambda);
  const FieldPtr& f = lambda.field();
  const FieldElem one = f->one();
  const FieldElem num = lambda * lambda - lambda + one;
  const FieldElem den = lambda * lambda * (lambda - one) * (lambda - one);
  return f->from_integer(256) * num * num * num / den;
}

std::vector<FieldElem> lambda_orbit(const FieldElem& lambda) {
  require_nondegenerate(lambda);
  const FieldElem one = lambda.field()->one();
  return {lambda,
          one - lambda,
          lambda.inv(),
          (one - lambda).inv(),
          (lambda - one) / lambda,
          lambda / (lambda - one)};
}

std::pair<FieldElem, FieldElem> char2_singular_point(const LegendreCurve& curve) {
  const FieldPtr& f = curve.field();
  if (f->characteristic() != 2)
    raise(errc::wrong_characteristic, "the singular point exists only in characteristic 2");
  const FieldElem& lambda = curve.lambda();
  const FieldElem s = sqrt_char2(lambda);
  const FieldElem y0 = lambda + s;

  const Poly2 F = curve.plane_equation();
  const Poly2 Fx = F.partial_x();
  // Certificate. The y-partial of y^2 + x(x+1)(x+lambda) vanishes
  // identically here, so a singular point is any curve point killing Fx.
  if (!F.partial_y().is_zero())
    raise(errc::not_singular, "internal: y-partial does not vanish identically");
  if (!F.eval(s, y0).is_zero() || !Fx.eval(s, y0).is_zero())
    raise(errc::not_singular, "internal: claimed singular point fails the equations");
  // Uniqueness, by full sweep of the affine plane (fields of characteristic
  // 2 stay small under the order cap).
  for (std::int64_t i = 0; i < f->order(); ++i) {
    const FieldElem x = f->element_at(i);
    for (std::int64_t j = 0; j < f->order(); ++j) {
      const FieldElem y = f->element_at(j);
      const bool singular = F.eval(x, y).is_zero() && Fx.eval(x, y).is_zero();
      if (singular != (x == s && y == y0))
        raise(errc::not_singular, "internal: singular locus is not the single claimed point");
    }
  }
  // The point at infinity of the projective closure is smooth: in the chart
  // centred there the partial along the line at infinity is 1.
  Poly2 chart(f);
  for (const auto& [exps, coeff] : F.terms())
    chart.set_coeff(exps.first, 3 - exps.first - exps.second,
                    chart.coeff(exps.first, 3 - exps.first - exps.second) + coeff);
  if (!chart.eval(f->zero(), f->zero()).is_zero() ||
      (chart.partial_x().eval(f->zero(), f->zero()).is_zero() &&
       chart.partial_y().eval(f->zero(), f->zero()).is_zero()))
    raise(errc::not_singular, "internal: the point at infinity is not a smooth curve point");
  return {s, y0};
}

SingularityType singularity_type(const LegendreCurve& curve) {
  if (curve.field()->characteristic() != 2)
    raise(errc::not_singular,
          "the curve is smooth: 0, 1, lambda are distinct branch values away from characteristic 2");
  const auto [x0, y0] = char2_singular_point(curve);
  const Poly2 local = curve.plane_equation().shifted(x0, y0);
  if (!local.homogeneous_part(0).is_zero() || !local.homogeneous_part(1).is_zero())
    raise(errc::not_singular, "internal: recentred equation keeps low-order terms");
  const Poly2 quad = local.homogeneous_part(2);
  const FieldElem a = quad.coeff(2, 0);
  const FieldElem b = quad.coeff(1, 1);
  const FieldElem c = quad.coeff(0, 2);
  // Two distinct tangent directions make a node; that happens exactly when
  // b^2 - 4ac is nonzero. In characteristic 2 the cross term b is zero and
  // the cone is the perfect square (y + sqrt(a) x)^2.
  const FieldElem disc = b * b - curve.field()->from_integer(4) * a * c;
  return disc.is_zero() ? SingularityType::NonNode : SingularityType::Node;
}

std::vector<P1Point> fixed_points(InvolutionKind which, const FieldElem& lambda) {
  require_nondegenerate(lambda);
  const FieldPtr& f = lambda.field();
  const Mobius map = involution_map(which, lambda);
  auto points = fixed_points_over(map, f);
  if (!points.empty() || f->is_rationals() || f->characteristic() == 2) return points;
  // No fixed point over the parent: pass to the quadratic extension when it
  // stays within the supported sizes. Over the rationals irrational fixed
  // points are reported as absent.
  const int k2 = 2 * f->extension_degree();
  if (k2 > 8 || f->order() > (std::int64_t(1) << 10)) return points;
  const FieldPtr big = Field::make(f->characteristic(), k2);
  const Mobius lifted{embed(map.a, big), embed(map.b, big), embed(map.c, big),
                      embed(map.d, big)};
  return fixed_points_over(lifted, big);
}

}  // namespace hf
