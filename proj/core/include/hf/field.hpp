#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hf/errors.hpp"

namespace hf {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class Field;
class FieldElem;
using FieldPtr = std::shared_ptr<const Field>;

// The rationals (p = 0, k = 1) or GF(p^k) with 1 <= k <= 8. Extension fields
// use a fixed polynomial basis: elements are coefficient vectors in the
// quotient GF(p)[t]/(modulus), modulus stored low-to-high and monic.
//
// Construction picks the modulus deterministically: the named small fields
// come from a versioned table, everything else takes the first monic
// irreducible polynomial of degree k in base-p coefficient order. The choice
// never depends on run order, so serialized elements stay portable.
class Field : public std::enable_shared_from_this<Field> {
public:
  // p = 0, k = 1 for the rationals; otherwise p prime, 1 <= k <= 8 and
  // p^k <= 2^20 (a desk-scale cap; exhaustive checks stay cheap below it).
  static FieldPtr make(std::int64_t p, int k);
  static FieldPtr rationals() { return make(0, 1); }

  std::int64_t characteristic() const { return p_; }
  int extension_degree() const { return k_; }
  bool is_rationals() const { return p_ == 0; }
  // Number of elements; 0 for the rationals.
  std::int64_t order() const { return order_; }
  // Monic modulus, low-to-high, size k+1. Empty for prime fields and Q.
  const std::vector<std::int64_t>& modulus() const { return modulus_; }

  bool same_as(const Field& other) const;

  FieldElem zero() const;
  FieldElem one() const;
  FieldElem from_integer(std::int64_t n) const;
  FieldElem from_rational(const Rational& r) const;
  // Coefficients low-to-high; reduced mod p, truncated/padded to length k.
  FieldElem from_coeffs(std::vector<std::int64_t> coeffs) const;
  // Element with canonical index i in [0, order): base-p digits of i are the
  // coefficients, least significant digit first.
  FieldElem element_at(std::int64_t index) const;

  static const char* modulus_table_version();

private:
  Field(std::int64_t p, int k, std::vector<std::int64_t> modulus);

  FieldPtr self() const { return shared_from_this(); }

  std::int64_t p_;
  int k_;
  std::int64_t order_;
  std::vector<std::int64_t> modulus_;

  friend class FieldElem;
};

class FieldElem {
public:
  FieldElem() = default;  // empty element; using it in arithmetic is a bug

  const FieldPtr& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  // Q only.
  const Rational& rational() const;
  // Finite fields only; low-to-high, length k.
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
  // Canonical index in [0, order); inverse of Field::element_at.
  std::int64_t index() const;

  FieldElem operator-() const;
  FieldElem inv() const;
  FieldElem pow(std::int64_t e) const;
  // a -> a^p. Identity on Q and GF(p).
  FieldElem frobenius() const;

  friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator/(const FieldElem& a, const FieldElem& b);
  friend bool operator==(const FieldElem& a, const FieldElem& b);
  friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }

  // Total order for deterministic containers: by rational value on Q, by
  // canonical index on finite fields. Mixed-field comparison is a bug.
  friend bool operator<(const FieldElem& a, const FieldElem& b);

private:
  FieldElem(FieldPtr f, Rational r) : field_(std::move(f)), rat_(std::move(r)) {}
  FieldElem(FieldPtr f, std::vector<std::int64_t> c) : field_(std::move(f)), coeffs_(std::move(c)) {}

  FieldPtr field_;
  Rational rat_;
  std::vector<std::int64_t> coeffs_;

  friend class Field;
};

// Square root in characteristic 2: the Frobenius x -> x^2 is a bijection, so
// every element has the unique root a^(2^(k-1)).
FieldElem sqrt_char2(const FieldElem& a);

// Exact square root over any supported field when one exists.
std::optional<FieldElem> try_sqrt(const FieldElem& a);

// A point of P^1 over a fixed field: either a finite field element or the
// point at infinity.
class P1Point {
public:
  static P1Point finite(FieldElem value);
  static P1Point infinity(FieldPtr field);

  bool is_infinity() const { return infinite_; }
  const FieldElem& value() const;  // finite points only
  const FieldPtr& field() const { return field_; }

  friend bool operator==(const P1Point& a, const P1Point& b);
  friend bool operator!=(const P1Point& a, const P1Point& b) { return !(a == b); }
  // Finite points first (by element order), infinity last.
  friend bool operator<(const P1Point& a, const P1Point& b);

private:
  P1Point(FieldPtr f, bool inf, FieldElem v)
      : field_(std::move(f)), infinite_(inf), value_(std::move(v)) {}

  FieldPtr field_;
  bool infinite_ = false;
  FieldElem value_;
};

// (num, den) -> num/den as a projective point. (0, 0) is indeterminate.
P1Point p1_normalize(const FieldElem& num, const FieldElem& den);

// All points of P^1 over a finite field, element order then infinity.
std::vector<P1Point> p1_points(const FieldPtr& field);

// Throws field_mismatch unless both elements live in the same field (by
// structure, not pointer identity: separately made copies interoperate).
void require_same_field(const FieldElem& a, const FieldElem& b);

}  // namespace hf
