#include "hf/polynomial.hpp"

#include <algorithm>

#include "hf/errors.hpp"

namespace hf {

namespace {

void require_same_poly_field(const Poly2& a, const Poly2& b) {
  if (!a.field()->same_as(*b.field()))
    raise(errc::field_mismatch, "polynomials live over different fields");
}

}  // namespace

Poly2::Poly2(FieldPtr field) : field_(std::move(field)) {}

Poly2 Poly2::constant(const FieldElem& value) {
  Poly2 p(value.field());
  p.set_coeff(0, 0, value);
  return p;
}

Poly2 Poly2::var_x(const FieldPtr& field) {
  Poly2 p(field);
  p.set_coeff(1, 0, field->one());
  return p;
}

Poly2 Poly2::var_y(const FieldPtr& field) {
  Poly2 p(field);
  p.set_coeff(0, 1, field->one());
  return p;
}

int Poly2::total_degree() const {
  int degree = -1;
  for (const auto& [exps, coeff] : terms_) degree = std::max(degree, exps.first + exps.second);
  return degree;
}

FieldElem Poly2::coeff(int i, int j) const {
  const auto it = terms_.find({i, j});
  return it == terms_.end() ? field_->zero() : it->second;
}

void Poly2::set_coeff(int i, int j, const FieldElem& value) {
  if (i < 0 || j < 0) raise(errc::usage_error, "monomial exponents must be nonnegative");
  if (value.is_zero())
    terms_.erase({i, j});
  else
    terms_.insert_or_assign({i, j}, value);
}

FieldElem Poly2::eval(const FieldElem& x, const FieldElem& y) const {
  FieldElem total = field_->zero();
  for (const auto& [exps, coeff] : terms_) {
    FieldElem term = coeff;
    for (int i = 0; i < exps.first; ++i) term = term * x;
    for (int j = 0; j < exps.second; ++j) term = term * y;
    total = total + term;
  }
  return total;
}

Poly2 Poly2::partial_x() const {
  Poly2 out(field_);
  for (const auto& [exps, coeff] : terms_) {
    if (exps.first == 0) continue;
    out.set_coeff(exps.first - 1, exps.second, coeff * field_->from_integer(exps.first));
  }
  return out;
}

Poly2 Poly2::partial_y() const {
  Poly2 out(field_);
  for (const auto& [exps, coeff] : terms_) {
    if (exps.second == 0) continue;
    out.set_coeff(exps.first, exps.second - 1, coeff * field_->from_integer(exps.second));
  }
  return out;
}

Poly2 Poly2::shifted(const FieldElem& x0, const FieldElem& y0) const {
  const Poly2 sx = var_x(field_) + constant(x0);
  const Poly2 sy = var_y(field_) + constant(y0);
  Poly2 out(field_);
  for (const auto& [exps, coeff] : terms_) {
    Poly2 term = constant(coeff);
    for (int i = 0; i < exps.first; ++i) term = term * sx;
    for (int j = 0; j < exps.second; ++j) term = term * sy;
    out = out + term;
  }
  return out;
}

Poly2 Poly2::homogeneous_part(int k) const {
  Poly2 out(field_);
  for (const auto& [exps, coeff] : terms_)
    if (exps.first + exps.second == k) out.set_coeff(exps.first, exps.second, coeff);
  return out;
}

Poly2 operator+(const Poly2& a, const Poly2& b) {
  require_same_poly_field(a, b);
  Poly2 out = a;
  for (const auto& [exps, coeff] : b.terms_)
    out.set_coeff(exps.first, exps.second, out.coeff(exps.first, exps.second) + coeff);
  return out;
}

Poly2 operator-(const Poly2& a, const Poly2& b) { return a + (-b); }

Poly2 Poly2::operator-() const {
  Poly2 out(field_);
  for (const auto& [exps, coeff] : terms_) out.set_coeff(exps.first, exps.second, -coeff);
  return out;
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
  require_same_poly_field(a, b);
  Poly2 out(a.field_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      const int i = ea.first + eb.first;
      const int j = ea.second + eb.second;
      out.set_coeff(i, j, out.coeff(i, j) + ca * cb);
    }
  return out;
}

bool operator==(const Poly2& a, const Poly2& b) {
  require_same_poly_field(a, b);
  return a.terms_ == b.terms_;
}

std::vector<FieldElem> solve_quadratic(const FieldElem& a, const FieldElem& b,
                                       const FieldElem& c) {
  const FieldPtr field = a.field();
  require_same_field(a, b);
  require_same_field(b, c);
  if (a.is_zero()) {
    if (b.is_zero()) raise(errc::usage_error, "degenerate equation: both leading coefficients are zero");
    return {-c / b};
  }
  std::vector<FieldElem> roots;
  if (field->characteristic() == 2) {
    // Squaring is bijective, so b == 0 forces the unique double root; with
    // b != 0 the two candidate roots are found by exact search.
    if (b.is_zero()) return {sqrt_char2(c / a)};
    for (std::int64_t i = 0; i < field->order(); ++i) {
      const FieldElem x = field->element_at(i);
      if ((a * x * x + b * x + c).is_zero()) roots.push_back(x);
      if (roots.size() == 2) break;
    }
  } else {
    const FieldElem disc = b * b - field->from_integer(4) * a * c;
    const auto root = try_sqrt(disc);
    if (root) {
      const FieldElem two_a = field->from_integer(2) * a;
      roots.push_back((-b + *root) / two_a);
      roots.push_back((-b - *root) / two_a);
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace hf
