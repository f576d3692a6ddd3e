#pragma once

#include <map>
#include <utility>
#include <vector>

#include "hf/field.hpp"

namespace hf {

// Exact polynomial in two variables x, y over a fixed field, dense enough for
// plane-curve bookkeeping at degree <= 3. Zero coefficients are never stored.
class Poly2 {
 public:
  explicit Poly2(FieldPtr field);

  static Poly2 constant(const FieldElem& value);
  static Poly2 var_x(const FieldPtr& field);
  static Poly2 var_y(const FieldPtr& field);

  const FieldPtr& field() const { return field_; }
  bool is_zero() const { return terms_.empty(); }
  // -1 for the zero polynomial.
  int total_degree() const;

  // Zero when the monomial x^i y^j is absent.
  FieldElem coeff(int i, int j) const;
  void set_coeff(int i, int j, const FieldElem& value);

  FieldElem eval(const FieldElem& x, const FieldElem& y) const;

  Poly2 partial_x() const;
  Poly2 partial_y() const;

  // p(x + x0, y + y0): recentres the origin onto (x0, y0).
  Poly2 shifted(const FieldElem& x0, const FieldElem& y0) const;

  // Terms of total degree exactly k.
  Poly2 homogeneous_part(int k) const;

  const std::map<std::pair<int, int>, FieldElem>& terms() const { return terms_; }

  friend Poly2 operator+(const Poly2& a, const Poly2& b);
  friend Poly2 operator-(const Poly2& a, const Poly2& b);
  friend Poly2 operator*(const Poly2& a, const Poly2& b);
  Poly2 operator-() const;
  friend bool operator==(const Poly2& a, const Poly2& b);
  friend bool operator!=(const Poly2& a, const Poly2& b) { return !(a == b); }

 private:
  FieldPtr field_;
  std::map<std::pair<int, int>, FieldElem> terms_;
};

// Distinct roots of a x^2 + b x + c over the coefficients' field, sorted.
// At least one of a, b must be nonzero. Over the rationals an irrational
// discriminant yields no roots; finite fields are searched exactly.
std::vector<FieldElem> solve_quadratic(const FieldElem& a, const FieldElem& b,
                                       const FieldElem& c);

}  // namespace hf
