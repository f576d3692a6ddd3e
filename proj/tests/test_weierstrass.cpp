#include <cmath>
#include <functional>
#include <optional>
#include <vector>

#include <doctest.h>

#include "hf/errors.hpp"
#include "hf/field.hpp"
#include "hf/legendre.hpp"
#include "hf/weierstrass.hpp"

using hf::FieldElem;
using hf::FieldPtr;
using hf::WeierstrassCurve;

namespace {

std::optional<WeierstrassCurve> try_curve(const std::vector<FieldElem>& a) {
  try {
    return WeierstrassCurve(a[0], a[1], a[2], a[3], a[4]);
  } catch (const hf::Error&) {
    return std::nullopt;
  }
}

// Oracle shared with nothing in the library: the affine equation and its two
// partial derivatives, evaluated directly.
FieldElem eq_at(const std::vector<FieldElem>& a, const FieldElem& x, const FieldElem& y) {
  return y * y + a[0] * x * y + a[2] * y - x * x * x - a[1] * x * x - a[3] * x - a[4];
}

bool has_affine_singularity(const FieldPtr& f, const std::vector<FieldElem>& a) {
  const FieldElem two = f->from_integer(2), three = f->from_integer(3);
  for (std::int64_t i = 0; i < f->order(); ++i)
    for (std::int64_t j = 0; j < f->order(); ++j) {
      const FieldElem x = f->element_at(i), y = f->element_at(j);
      const FieldElem fx = a[0] * y - three * x * x - two * a[1] * x - a[3];
      const FieldElem fy = two * y + a[0] * x + a[2];
      if (eq_at(a, x, y).is_zero() && fx.is_zero() && fy.is_zero()) return true;
    }
  return false;
}

std::int64_t brute_point_count(const FieldPtr& f, const std::vector<FieldElem>& a) {
  std::int64_t affine = 0;
  for (std::int64_t i = 0; i < f->order(); ++i)
    for (std::int64_t j = 0; j < f->order(); ++j)
      if (eq_at(a, f->element_at(i), f->element_at(j)).is_zero()) ++affine;
  return affine + 1;
}

// All coefficient vectors (a1, a2, a3, a4, a6) over the field.
void for_each_tuple(const FieldPtr& f, const std::function<void(const std::vector<FieldElem>&)>& fn) {
  const std::int64_t q = f->order();
  std::vector<FieldElem> a(5, f->zero());
  for (std::int64_t i0 = 0; i0 < q; ++i0)
    for (std::int64_t i1 = 0; i1 < q; ++i1)
      for (std::int64_t i2 = 0; i2 < q; ++i2)
        for (std::int64_t i3 = 0; i3 < q; ++i3)
          for (std::int64_t i4 = 0; i4 < q; ++i4) {
            a[0] = f->element_at(i0);
            a[1] = f->element_at(i1);
            a[2] = f->element_at(i2);
            a[3] = f->element_at(i3);
            a[4] = f->element_at(i4);
            fn(a);
          }
}

}  // namespace

TEST_CASE("singular equations are rejected, matching the geometric test") {
  const auto q = hf::Field::rationals();
  const auto zero = q->zero();
  CHECK_THROWS_AS(WeierstrassCurve(zero, zero, zero, zero, zero), hf::Error);  // y^2 = x^3
  try {
    WeierstrassCurve(zero, zero, zero, zero, zero);
    FAIL("expected a throw");
  } catch (const hf::Error& e) {
    CHECK(e.code() == hf::errc::singular_curve);
  }

  for (const auto& [p, k] : std::vector<std::pair<std::int64_t, int>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
    const auto f = hf::Field::make(p, k);
    CAPTURE(p);
    CAPTURE(k);
    for_each_tuple(f, [&](const std::vector<FieldElem>& a) {
      CHECK(try_curve(a).has_value() == !has_affine_singularity(f, a));
    });
  }
}

TEST_CASE("discriminant and j on rational anchors") {
  const auto q = hf::Field::rationals();
  const auto e = [&](std::int64_t n) { return q->from_integer(n); };

  // y^2 = x^3 - x = x(x-1)(x+1)
  const WeierstrassCurve mx(e(0), e(0), e(0), e(-1), e(0));
  CHECK(mx.discriminant() == e(64));
  CHECK(hf::weierstrass_j(mx) == e(1728));
  CHECK(hf::weierstrass_j(mx) == hf::j_from_lambda(e(-1)));

  // y^2 = x^3 - x + 1: disc = -16(4a^3 + 27b^2) = -368
  const WeierstrassCurve other(e(0), e(0), e(0), e(-1), e(1));
  CHECK(other.discriminant() == e(-368));

  // j matches the lambda formula across the whole Legendre family
  for (int lam = -6; lam <= 6; ++lam) {
    if (lam == 0 || lam == 1) continue;
    // y^2 = x(x-1)(x-lam): a2 = -(1+lam), a4 = lam
    const WeierstrassCurve c(e(0), e(-(1 + lam)), e(0), e(lam), e(0));
    CHECK(hf::weierstrass_j(c) == hf::j_from_lambda(e(lam)));
  }
}

TEST_CASE("point counts over GF(2)") {
  const auto f2 = hf::Field::make(2, 1);
  const auto e = [&](std::int64_t n) { return f2->from_integer(n); };

  // y^2 + y = x^3: (0,0), (0,1), infinity
  const WeierstrassCurve ss(e(0), e(0), e(1), e(0), e(0));
  CHECK(hf::point_count(ss) == 3);
  CHECK(hf::trace_of_frobenius(ss) == 0);
  CHECK(hf::is_supersingular(ss));
  CHECK(hf::weierstrass_j(ss).is_zero());
  CHECK(hf::two_torsion_count(ss) == 0);

  // y^2 + xy = x^3 + 1: (0,1), (1,0), (1,1), infinity
  const WeierstrassCurve ord(e(1), e(0), e(0), e(0), e(1));
  CHECK(hf::point_count(ord) == 4);
  CHECK(hf::trace_of_frobenius(ord) == -1);
  CHECK(!hf::is_supersingular(ord));
  CHECK(hf::weierstrass_j(ord) == e(1));
  CHECK(hf::two_torsion_count(ord) == 1);
}

TEST_CASE("point counting matches brute force and the Hasse bound") {
  for (const auto& [p, k] : std::vector<std::pair<std::int64_t, int>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
    const auto f = hf::Field::make(p, k);
    const double q = static_cast<double>(f->order());
    CAPTURE(p);
    CAPTURE(k);
    for_each_tuple(f, [&](const std::vector<FieldElem>& a) {
      const auto curve = try_curve(a);
      if (!curve) return;
      const std::int64_t n = hf::point_count(*curve);
      CHECK(n == brute_point_count(f, a));
      CHECK(std::abs(static_cast<double>(f->order()) + 1 - static_cast<double>(n)) <=
            2.0 * std::sqrt(q));
    });
  }
}

TEST_CASE("point counting at larger orders stays consistent") {
  // a few spot checks where brute force is still cheap
  for (const auto& [p, k] : std::vector<std::pair<std::int64_t, int>>{{7, 1}, {2, 3}, {3, 2}, {13, 1}}) {
    const auto f = hf::Field::make(p, k);
    CAPTURE(p);
    CAPTURE(k);
    int checked = 0;
    for (std::int64_t i = 0; i < 4 * f->order() && checked < 6; ++i) {
      const std::vector<FieldElem> a = {f->element_at(i % f->order()),
                                        f->element_at((i + 1) % f->order()),
                                        f->element_at((i * 2 + 1) % f->order()),
                                        f->element_at((i * 3) % f->order()),
                                        f->one()};
      const auto curve = try_curve(a);
      if (!curve) continue;
      ++checked;
      CHECK(hf::point_count(*curve) == brute_point_count(f, a));
    }
    CHECK(checked == 6);
  }
}

TEST_CASE("supersingularity, j, and 2-torsion line up in characteristic 2") {
  for (const int k : {1, 2, 3}) {
    const auto f = hf::Field::make(2, k);
    CAPTURE(k);
    int curves = 0, supersingular = 0;
    for_each_tuple(f, [&](const std::vector<FieldElem>& a) {
      const auto curve = try_curve(a);
      if (!curve) return;
      ++curves;
      const bool ss = hf::is_supersingular(*curve);
      if (ss) ++supersingular;
      CHECK(ss == hf::weierstrass_j(*curve).is_zero());
      const int torsion = hf::two_torsion_count(*curve);
      CHECK(ss == (torsion == 0));
      if (!ss) CHECK(torsion == 1);
      // in characteristic 2 the curve is ordinary exactly when a1 != 0
      CHECK(ss == a[0].is_zero());
    });
    CHECK(curves > 0);
    CHECK(supersingular > 0);
    CHECK(supersingular < curves);
  }
}

TEST_CASE("2-torsion counting needs characteristic 2") {
  const auto q = hf::Field::rationals();
  const WeierstrassCurve e(q->zero(), q->zero(), q->zero(), q->from_integer(-1), q->zero());
  try {
    hf::two_torsion_count(e);
    FAIL("expected a throw");
  } catch (const hf::Error& err) {
    CHECK(err.code() == hf::errc::wrong_characteristic);
  }
  const auto f3 = hf::Field::make(3, 1);
  const WeierstrassCurve e3(f3->zero(), f3->zero(), f3->zero(), f3->from_integer(-1), f3->zero());
  CHECK_THROWS_AS(hf::two_torsion_count(e3), hf::Error);
}

TEST_CASE("translation x -> x + c preserves count and j") {
  const auto f4 = hf::Field::make(2, 2);
  const FieldElem three = f4->from_integer(3), two = f4->from_integer(2);
  for_each_tuple(f4, [&](const std::vector<FieldElem>& a) {
    const auto curve = try_curve(a);
    if (!curve) return;
    for (std::int64_t ic = 0; ic < 4; ++ic) {
      const FieldElem c = f4->element_at(ic);
      const std::vector<FieldElem> shifted = {
          a[0],
          a[1] + three * c,
          a[2] + a[0] * c,
          a[3] + two * a[1] * c + three * c * c,
          a[4] + a[3] * c + a[1] * c * c + c * c * c};
      const auto moved = try_curve(shifted);
      REQUIRE(moved.has_value());
      CHECK(hf::point_count(*moved) == hf::point_count(*curve));
      CHECK(hf::weierstrass_j(*moved) == hf::weierstrass_j(*curve));
    }
  });
}

TEST_CASE("counting caps") {
  const auto q = hf::Field::rationals();
  const WeierstrassCurve rational(q->zero(), q->zero(), q->zero(), q->from_integer(-1), q->zero());
  try {
    hf::point_count(rational);
    FAIL("expected a throw");
  } catch (const hf::Error& e) {
    CHECK(e.code() == hf::errc::scale_cap);
  }
  CHECK_THROWS_AS(hf::is_supersingular(rational), hf::Error);

  // order 257^2 = 66049 crosses the 2^16 counting cap
  const auto big = hf::Field::make(257, 2);
  const WeierstrassCurve over(big->zero(), big->zero(), big->zero(), big->from_integer(-1),
                              big->zero());
  CHECK_THROWS_AS(hf::point_count(over), hf::Error);

  // order 251 <= 2^16 still counts
  const auto ok = hf::Field::make(251, 1);
  const WeierstrassCurve fine(ok->zero(), ok->zero(), ok->zero(), ok->from_integer(-1),
                              ok->zero());
  const std::int64_t n = hf::point_count(fine);
  CHECK(std::abs(static_cast<double>(252 - n)) <= 2.0 * std::sqrt(251.0));
}

TEST_CASE("mixed-field coefficients are rejected") {
  const auto q = hf::Field::rationals();
  const auto f4 = hf::Field::make(2, 2);
  CHECK_THROWS_AS(
      WeierstrassCurve(q->zero(), f4->zero(), q->zero(), q->from_integer(-1), q->zero()),
      hf::Error);
}
