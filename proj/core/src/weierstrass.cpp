#include "hf/weierstrass.hpp"

#include <utility>
#include <vector>

#include "hf/errors.hpp"

namespace hf {
namespace {

constexpr std::int64_t kMaxCountOrder = std::int64_t(1) << 16;

struct BValues {
  FieldElem b2, b4, b6, b8;
};

BValues b_values(const WeierstrassCurve& e) {
  const FieldPtr& f = e.field();
  const FieldElem four = f->from_integer(4);
  const FieldElem two = f->from_integer(2);
  BValues b;
  b.b2 = e.a1() * e.a1() + four * e.a2();
  b.b4 = two * e.a4() + e.a1() * e.a3();
  b.b6 = e.a3() * e.a3() + four * e.a6();
  b.b8 = e.a1() * e.a1() * e.a6() + four * e.a2() * e.a6() - e.a1() * e.a3() * e.a4() +
         e.a2() * e.a3() * e.a3() - e.a4() * e.a4();
  return b;
}

FieldElem discriminant_of(const WeierstrassCurve& e) {
  const FieldPtr& f = e.field();
  const BValues b = b_values(e);
  return -b.b2 * b.b2 * b.b8 - f->from_integer(8) * b.b4 * b.b4 * b.b4 -
         f->from_integer(27) * b.b6 * b.b6 + f->from_integer(9) * b.b2 * b.b4 * b.b6;
}

// Right-hand side x^3 + a2 x^2 + a4 x + a6.
FieldElem rhs_at(const WeierstrassCurve& e, const FieldElem& x) {
  return ((x + e.a2()) * x + e.a4()) * x + e.a6();
}

void require_countable(const WeierstrassCurve& e) {
  const FieldPtr& f = e.field();
  if (f->is_rationals())
    raise(errc::scale_cap, "point counting enumerates the base field; it needs a finite one");
  if (f->order() > kMaxCountOrder)
    raise(errc::scale_cap, "point counting is capped at fields of order 2^16");
}

}  // namespace

WeierstrassCurve::WeierstrassCurve(FieldElem a1, FieldElem a2, FieldElem a3, FieldElem a4,
                                   FieldElem a6)
    : a1_(std::move(a1)),
      a2_(std::move(a2)),
      a3_(std::move(a3)),
      a4_(std::move(a4)),
      a6_(std::move(a6)) {
  require_same_field(a1_, a2_);
  require_same_field(a1_, a3_);
  require_same_field(a1_, a4_);
  require_same_field(a1_, a6_);
  disc_ = discriminant_of(*this);
  if (disc_.is_zero()) raise(errc::singular_curve, "the discriminant vanishes");
}

FieldElem weierstrass_j(const WeierstrassCurve& curve) {
  const BValues b = b_values(curve);
  const FieldElem c4 = b.b2 * b.b2 - curve.field()->from_integer(24) * b.b4;
  return c4 * c4 * c4 / curve.discriminant();
}

std::int64_t point_count(const WeierstrassCurve& curve) {
  require_countable(curve);
  const FieldPtr& f = curve.field();
  const std::int64_t q = f->order();
  std::int64_t affine = 0;
  if (f->characteristic() == 2) {
    // y^2 + B y = C with B = a1 x + a3. B = 0 leaves the lone root sqrt(C);
    // otherwise substitute y = B z to reach z^2 + z = C / B^2, which has two
    // solutions when the right side is in the image of z^2 + z and none
    // otherwise.
    std::vector<char> image(static_cast<std::size_t>(q), 0);
    for (std::int64_t i = 0; i < q; ++i) {
      const FieldElem z = f->element_at(i);
      image[static_cast<std::size_t>((z * z + z).index())] = 1;
    }
    for (std::int64_t i = 0; i < q; ++i) {
      const FieldElem x = f->element_at(i);
      const FieldElem b = curve.a1() * x + curve.a3();
      const FieldElem c = rhs_at(curve, x);
      if (b.is_zero())
        affine += 1;
      else
        affine += image[static_cast<std::size_t>((c / (b * b)).index())] ? 2 : 0;
    }
  } else {
    // complete the square: (y + B/2)^2 = C + (B/2)^2, then count square
    // roots with one table pass
    std::vector<int> roots_of(static_cast<std::size_t>(q), 0);
    for (std::int64_t i = 0; i < q; ++i) {
      const FieldElem y = f->element_at(i);
      ++roots_of[static_cast<std::size_t>((y * y).index())];
    }
    const FieldElem half = f->from_integer(2).inv();
    for (std::int64_t i = 0; i < q; ++i) {
      const FieldElem x = f->element_at(i);
      const FieldElem shift = (curve.a1() * x + curve.a3()) * half;
      const FieldElem d = rhs_at(curve, x) + shift * shift;
      affine += roots_of[static_cast<std::size_t>(d.index())];
    }
  }
  return affine + 1;
}

std::int64_t trace_of_frobenius(const WeierstrassCurve& curve) {
  require_countable(curve);
  return curve.field()->order() + 1 - point_count(curve);
}

bool is_supersingular(const WeierstrassCurve& curve) {
  const std::int64_t t = trace_of_frobenius(curve);
  const std::int64_t p = curve.field()->characteristic();
  return ((t % p) + p) % p == 0;
}

int two_torsion_count(const WeierstrassCurve& curve) {
  const FieldPtr& f = curve.field();
  if (f->characteristic() != 2)
    raise(errc::wrong_characteristic, "the vertical-tangent condition a1 x + a3 = 0 is the "
                                      "2-torsion locus only in characteristic 2");
  int count = 0;
  for (std::int64_t i = 0; i < f->order(); ++i) {
    const FieldElem x = f->element_at(i);
    if (!(curve.a1() * x + curve.a3()).is_zero()) continue;
    for (std::int64_t j = 0; j < f->order(); ++j) {
      const FieldElem y = f->element_at(j);
      const FieldElem lhs = y * y + curve.a1() * x * y + curve.a3() * y;
      if (lhs == rhs_at(curve, x)) ++count;
    }
  }
  return count;
}

}  // namespace hf
