#include <vector>

#include <doctest.h>

#include "hf/errors.hpp"
#include "hf/field.hpp"
#include "hf/polynomial.hpp"

using hf::FieldElem;
using hf::Poly2;

TEST_CASE("construction and coefficient access") {
  const auto q = hf::Field::rationals();
  const Poly2 x = Poly2::var_x(q);
  const Poly2 y = Poly2::var_y(q);
  const Poly2 p = x * x * y - y + Poly2::constant(q->from_integer(5));

  CHECK(p.coeff(2, 1) == q->one());
  CHECK(p.coeff(0, 1) == -q->one());
  CHECK(p.coeff(0, 0) == q->from_integer(5));
  CHECK(p.coeff(3, 3).is_zero());
  CHECK(p.total_degree() == 3);
  CHECK(Poly2(q).total_degree() == -1);
  CHECK(Poly2(q).is_zero());
  CHECK((p - p).is_zero());
}

TEST_CASE("evaluation matches direct arithmetic") {
  const auto q = hf::Field::rationals();
  const Poly2 x = Poly2::var_x(q);
  const Poly2 y = Poly2::var_y(q);
  const Poly2 p = x * x * x - x * y + Poly2::constant(q->from_integer(7)) * y * y;
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b) {
      const auto xa = q->from_integer(a), yb = q->from_integer(b);
      const auto direct =
          q->from_integer(a * a * a - a * b + 7 * b * b);
      CHECK(p.eval(xa, yb) == direct);
    }
}

TEST_CASE("formal partial derivatives") {
  const auto q = hf::Field::rationals();
  const Poly2 x = Poly2::var_x(q);
  const Poly2 y = Poly2::var_y(q);
  const Poly2 p = x * x * x + x * x * y * y + y;

  const Poly2 px = p.partial_x();
  CHECK(px.coeff(2, 0) == q->from_integer(3));
  CHECK(px.coeff(1, 2) == q->from_integer(2));
  CHECK(px.coeff(0, 1).is_zero());

  const Poly2 py = p.partial_y();
  CHECK(py.coeff(2, 1) == q->from_integer(2));
  CHECK(py.coeff(0, 0) == q->one());

  // over characteristic 2 the derivative of a square collapses
  const auto f4 = hf::Field::make(2, 2);
  const Poly2 y2 = Poly2::var_y(f4) * Poly2::var_y(f4);
  CHECK(y2.partial_y().is_zero());
}

TEST_CASE("shift recentres evaluation") {
  const auto f9 = hf::Field::make(3, 2);
  Poly2 p(f9);
  for (std::int64_t i = 0; i < 9; ++i)
    p.set_coeff(static_cast<int>(i % 3), static_cast<int>(i % 2), f9->element_at(i));
  const FieldElem x0 = f9->element_at(5), y0 = f9->element_at(7);
  const Poly2 shifted = p.shifted(x0, y0);
  for (std::int64_t i = 0; i < 9; ++i)
    for (std::int64_t j = 0; j < 9; ++j) {
      const FieldElem u = f9->element_at(i), v = f9->element_at(j);
      CHECK(shifted.eval(u, v) == p.eval(u + x0, v + y0));
    }
}

TEST_CASE("homogeneous parts partition the polynomial") {
  const auto q = hf::Field::rationals();
  const Poly2 x = Poly2::var_x(q);
  const Poly2 y = Poly2::var_y(q);
  const Poly2 p =
      x * x * x + Poly2::constant(q->from_integer(2)) * x * y + y * y - y +
      Poly2::constant(q->from_integer(9));
  Poly2 sum(q);
  for (int k = 0; k <= p.total_degree(); ++k) sum = sum + p.homogeneous_part(k);
  CHECK(sum == p);
  CHECK(p.homogeneous_part(2).coeff(1, 1) == q->from_integer(2));
  CHECK(p.homogeneous_part(2).coeff(0, 2) == q->one());
  CHECK(p.homogeneous_part(2).coeff(2, 0).is_zero());
}

TEST_CASE("quadratic roots over the rationals") {
  const auto q = hf::Field::rationals();
  const auto e = [&](std::int64_t n) { return q->from_integer(n); };

  auto roots = hf::solve_quadratic(e(1), e(-5), e(6));
  REQUIRE(roots.size() == 2);
  CHECK(roots[0] == e(2));
  CHECK(roots[1] == e(3));

  CHECK(hf::solve_quadratic(e(1), e(0), e(-2)).empty());  // irrational pair

  roots = hf::solve_quadratic(e(1), e(-2), e(1));
  REQUIRE(roots.size() == 1);  // double root reported once
  CHECK(roots[0] == e(1));

  roots = hf::solve_quadratic(e(0), e(3), e(-6));
  REQUIRE(roots.size() == 1);
  CHECK(roots[0] == e(2));

  CHECK_THROWS_AS(hf::solve_quadratic(e(0), e(0), e(1)), hf::Error);
}

TEST_CASE("quadratic roots over finite fields match exhaustive search") {
  for (const auto& [p, k] : std::vector<std::pair<std::int64_t, int>>{
           {2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {5, 1}, {7, 1}}) {
    const auto f = hf::Field::make(p, k);
    CAPTURE(p);
    CAPTURE(k);
    for (std::int64_t ia = 0; ia < f->order(); ++ia)
      for (std::int64_t ib = 0; ib < std::min<std::int64_t>(f->order(), 5); ++ib)
        for (std::int64_t ic = 0; ic < std::min<std::int64_t>(f->order(), 5); ++ic) {
          const FieldElem a = f->element_at(ia), b = f->element_at(ib), c = f->element_at(ic);
          if (a.is_zero() && b.is_zero()) continue;
          std::vector<FieldElem> expected;
          for (std::int64_t ix = 0; ix < f->order(); ++ix) {
            const FieldElem x = f->element_at(ix);
            if ((a * x * x + b * x + c).is_zero()) expected.push_back(x);
          }
          CHECK(hf::solve_quadratic(a, b, c) == expected);
        }
  }
}

TEST_CASE("field mismatch is rejected") {
  const auto q = hf::Field::rationals();
  const auto f4 = hf::Field::make(2, 2);
  CHECK_THROWS_AS(Poly2::var_x(q) + Poly2::var_x(f4), hf::Error);
}
