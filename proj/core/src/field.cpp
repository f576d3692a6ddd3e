#include "hf/field.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <string>

namespace hf {

namespace {

constexpr std::int64_t kMaxOrder = 1 << 20;

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::int64_t mod_p(std::int64_t v, std::int64_t p) {
  v %= p;
  return v < 0 ? v + p : v;
}

// Polynomials over GF(p): coefficient vectors low-to-high, no trailing zeros.
using Poly = std::vector<std::int64_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = mod_p(out[i + j] + a[i] * b[j], p);
    }
  }
  trim(out);
  return out;
}

std::int64_t inv_mod_p(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = mod_p(a, p);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::swap(t -= q * new_t, new_t);
    std::swap(r -= q * new_r, new_r);
  }
  // r == gcd; callers only invert units
  return mod_p(t, p);
}

// Remainder of a modulo m (m monic after leading-coefficient scaling).
Poly poly_rem(Poly a, const Poly& m, std::int64_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::int64_t lead_inv = inv_mod_p(m.back(), p);
  while (a.size() >= m.size()) {
    std::int64_t c = mod_p(a.back() * lead_inv, p);
    std::size_t shift = a.size() - m.size();
    if (c != 0) {
      for (std::size_t i = 0; i < m.size(); ++i) {
        a[shift + i] = mod_p(a[shift + i] - c * m[i], p);
      }
    }
    a.pop_back();
    while (!a.empty() && a.back() == 0) a.pop_back();
    (void)dm;
  }
  return a;
}

// Exhaustive factor search: f (monic, degree k <= 8) is irreducible iff no
// monic polynomial of degree 1..k/2 divides it.
bool poly_irreducible(const Poly& f, std::int64_t p) {
  const int k = static_cast<int>(f.size()) - 1;
  if (k <= 0) return false;
  if (k == 1) return true;
  for (int d = 1; 2 * d <= k; ++d) {
    std::int64_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (std::int64_t idx = 0; idx < count; ++idx) {
      Poly g(d + 1, 0);
      std::int64_t v = idx;
      for (int i = 0; i < d; ++i) {
        g[i] = v % p;
        v /= p;
      }
      g[d] = 1;
      if (poly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

// First monic irreducible of degree k, lower-coefficient vectors ordered as
// base-p integers (least significant coefficient first).
Poly smallest_irreducible(std::int64_t p, int k) {
  std::int64_t count = 1;
  for (int i = 0; i < k; ++i) count *= p;
  for (std::int64_t idx = 0; idx < count; ++idx) {
    Poly f(k + 1, 0);
    std::int64_t v = idx;
    for (int i = 0; i < k; ++i) {
      f[i] = v % p;
      v /= p;
    }
    f[k] = 1;
    if (poly_irreducible(f, p)) return f;
  }
  raise(errc::unsupported_degree, "no irreducible modulus found (unreachable for prime p)");
}

struct TableEntry {
  std::int64_t p;
  int k;
  Poly modulus;
};

// Fixed moduli for the named small fields. Versioned: changing any entry
// breaks serialized-element compatibility and must bump the version string.
const std::array<TableEntry, 5>& modulus_table() {
  static const std::array<TableEntry, 5> table = {{
      {2, 2, {1, 1, 1}},        // t^2 + t + 1
      {2, 3, {1, 1, 0, 1}},     // t^3 + t + 1
      {2, 4, {1, 1, 0, 0, 1}},  // t^4 + t + 1
      {3, 2, {1, 0, 1}},        // t^2 + 1
      {3, 3, {1, 2, 0, 1}},     // t^3 - t + 1
  }};
  return table;
}

}  // namespace

const char* Field::modulus_table_version() { return "hf-moduli-1"; }

Field::Field(std::int64_t p, int k, std::vector<std::int64_t> modulus)
    : p_(p), k_(k), modulus_(std::move(modulus)) {
  if (p_ == 0) {
    order_ = 0;
  } else {
    order_ = 1;
    for (int i = 0; i < k_; ++i) order_ *= p_;
  }
}

FieldPtr Field::make(std::int64_t p, int k) {
  if (p == 0) {
    if (k != 1) raise(errc::unsupported_degree, "the rationals only support degree 1");
    static FieldPtr q(new Field(0, 1, {}));
    return q;
  }
  if (p < 0 || !is_prime(p)) {
    raise(errc::composite_characteristic,
          "characteristic " + std::to_string(p) + " is not prime");
  }
  if (k < 1 || k > 8) {
    raise(errc::unsupported_degree,
          "extension degree " + std::to_string(k) + " outside 1..8");
  }
  double approx = 1.0;
  for (int i = 0; i < k; ++i) approx *= static_cast<double>(p);
  if (approx > static_cast<double>(kMaxOrder)) {
    raise(errc::scale_cap, "field order exceeds 2^20");
  }

  // Cache by (p, k); fields are immutable so sharing is safe.
  static std::map<std::pair<std::int64_t, int>, FieldPtr> cache;
  static std::mutex cache_mutex;
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto it = cache.find({p, k});
  if (it != cache.end()) return it->second;

  Poly modulus;
  if (k > 1) {
    for (const auto& entry : modulus_table()) {
      if (entry.p == p && entry.k == k) {
        modulus = entry.modulus;
        break;
      }
    }
    if (modulus.empty()) modulus = smallest_irreducible(p, k);
    if (!poly_irreducible(modulus, p)) {
      raise(errc::unsupported_degree, "modulus is not irreducible");
    }
  }
  FieldPtr f(new Field(p, k, std::move(modulus)));
  cache.emplace(std::make_pair(p, k), f);
  return f;
}

bool Field::same_as(const Field& other) const {
  return p_ == other.p_ && k_ == other.k_ && modulus_ == other.modulus_;
}

FieldElem Field::zero() const { return from_integer(0); }
FieldElem Field::one() const { return from_integer(1); }

FieldElem Field::from_integer(std::int64_t n) const {
  if (p_ == 0) return FieldElem(self(), Rational(n));
  std::vector<std::int64_t> c(k_, 0);
  c[0] = mod_p(n, p_);
  return FieldElem(self(), std::move(c));
}

FieldElem Field::from_rational(const Rational& r) const {
  if (p_ == 0) return FieldElem(self(), r);
  BigInt num = numerator(r), den = denominator(r);
  BigInt pb(p_);
  if (den % pb == 0) raise(errc::division_by_zero, "denominator divisible by the characteristic");
  std::int64_t n = static_cast<std::int64_t>(num % pb);
  std::int64_t d = static_cast<std::int64_t>(den % pb);
  return from_integer(n) / from_integer(d);
}

FieldElem Field::from_coeffs(std::vector<std::int64_t> coeffs) const {
  if (p_ == 0) raise(errc::unsupported_degree, "coefficient vectors need a finite field");
  if (static_cast<int>(coeffs.size()) > k_) {
    // Reduce mod the modulus so callers can hand in raw polynomial products.
    Poly a;
    a.reserve(coeffs.size());
    for (auto v : coeffs) a.push_back(mod_p(v, p_));
    trim(a);
    if (k_ > 1) a = poly_rem(std::move(a), modulus_, p_);
    else if (!a.empty()) a = {a[0]};
    a.resize(k_, 0);
    return FieldElem(self(), std::move(a));
  }
  coeffs.resize(k_, 0);
  for (auto& v : coeffs) v = mod_p(v, p_);
  return FieldElem(self(), std::move(coeffs));
}

FieldElem Field::element_at(std::int64_t index) const {
  if (p_ == 0) raise(errc::unsupported_degree, "the rationals are not enumerable");
  if (index < 0 || index >= order_) raise(errc::scale_cap, "element index out of range");
  std::vector<std::int64_t> c(k_, 0);
  for (int i = 0; i < k_; ++i) {
    c[i] = index % p_;
    index /= p_;
  }
  return FieldElem(self(), std::move(c));
}

bool FieldElem::is_zero() const {
  if (!field_) raise(errc::field_mismatch, "empty element");
  if (field_->is_rationals()) return rat_ == 0;
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::int64_t v) { return v == 0; });
}

bool FieldElem::is_one() const { return *this == field_->one(); }

const Rational& FieldElem::rational() const {
  if (!field_ || !field_->is_rationals()) raise(errc::field_mismatch, "not a rational element");
  return rat_;
}

std::int64_t FieldElem::index() const {
  if (!field_ || field_->is_rationals()) raise(errc::field_mismatch, "index needs a finite field");
  std::int64_t idx = 0;
  for (int i = field_->extension_degree() - 1; i >= 0; --i) {
    idx = idx * field_->characteristic() + coeffs_[i];
  }
  return idx;
}

void require_same_field(const FieldElem& a, const FieldElem& b) {
  if (!a.field() || !b.field()) raise(errc::field_mismatch, "empty element");
  if (a.field().get() == b.field().get()) return;
  if (!a.field()->same_as(*b.field())) {
    raise(errc::field_mismatch, "operands live in different fields");
  }
}

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
  require_same_field(a, b);
  const Field& f = *a.field_;
  if (f.is_rationals()) return FieldElem(a.field_, a.rat_ + b.rat_);
  std::vector<std::int64_t> c(a.coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = mod_p(a.coeffs_[i] + b.coeffs_[i], f.characteristic());
  return FieldElem(a.field_, std::move(c));
}

FieldElem operator-(const FieldElem& a, const FieldElem& b) {
  require_same_field(a, b);
  const Field& f = *a.field_;
  if (f.is_rationals()) return FieldElem(a.field_, a.rat_ - b.rat_);
  std::vector<std::int64_t> c(a.coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = mod_p(a.coeffs_[i] - b.coeffs_[i], f.characteristic());
  return FieldElem(a.field_, std::move(c));
}

FieldElem FieldElem::operator-() const {
  if (!field_) raise(errc::field_mismatch, "empty element");
  return field_->zero() - *this;
}

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
  require_same_field(a, b);
  const Field& f = *a.field_;
  if (f.is_rationals()) return FieldElem(a.field_, a.rat_ * b.rat_);
  if (f.extension_degree() == 1) {
    return FieldElem(a.field_, std::vector<std::int64_t>{mod_p(a.coeffs_[0] * b.coeffs_[0], f.characteristic())});
  }
  Poly prod = poly_mul(a.coeffs_, b.coeffs_, f.characteristic());
  trim(prod);
  if (!prod.empty()) prod = poly_rem(std::move(prod), f.modulus(), f.characteristic());
  prod.resize(f.extension_degree(), 0);
  return FieldElem(a.field_, std::move(prod));
}

FieldElem FieldElem::inv() const {
  if (!field_) raise(errc::field_mismatch, "empty element");
  const Field& f = *field_;
  if (is_zero()) raise(errc::division_by_zero, "inverse of zero");
  if (f.is_rationals()) return FieldElem(field_, Rational(1) / rat_);
  if (f.k_ == 1) {
    return FieldElem(field_, std::vector<std::int64_t>{inv_mod_p(coeffs_[0], f.p_)});
  }
  // Extended Euclid in GF(p)[t] against the (irreducible) modulus.
  Poly r0 = f.modulus_, r1 = coeffs_;
  trim(r1);
  Poly t0 = {}, t1 = {1};
  while (!r1.empty()) {
    // Divide r0 by r1.
    Poly q;
    Poly rem = r0;
    trim(rem);
    const std::int64_t lead_inv = inv_mod_p(r1.back(), f.p_);
    if (rem.size() >= r1.size()) q.resize(rem.size() - r1.size() + 1, 0);
    while (rem.size() >= r1.size() && !rem.empty()) {
      std::int64_t c = mod_p(rem.back() * lead_inv, f.p_);
      std::size_t shift = rem.size() - r1.size();
      q[shift] = c;
      for (std::size_t i = 0; i < r1.size(); ++i) {
        rem[shift + i] = mod_p(rem[shift + i] - c * r1[i], f.p_);
      }
      while (!rem.empty() && rem.back() == 0) rem.pop_back();
    }
    Poly qt1 = poly_mul(q, t1, f.p_);
    Poly t2 = t0;
    t2.resize(std::max(t2.size(), qt1.size()), 0);
    for (std::size_t i = 0; i < qt1.size(); ++i) t2[i] = mod_p(t2[i] - qt1[i], f.p_);
    trim(t2);
    r0 = r1;
    r1 = rem;
    t0 = t1;
    t1 = t2;
  }
  // r0 is a nonzero constant gcd; scale t0 by its inverse.
  std::int64_t scale = inv_mod_p(r0.empty() ? 1 : r0[0], f.p_);
  Poly out = t0;
  for (auto& v : out) v = mod_p(v * scale, f.p_);
  out.resize(f.k_, 0);
  return FieldElem(field_, std::move(out));
}

FieldElem operator/(const FieldElem& a, const FieldElem& b) {
  require_same_field(a, b);
  if (b.is_zero()) raise(errc::division_by_zero, "division by zero");
  return a * b.inv();
}

bool operator==(const FieldElem& a, const FieldElem& b) {
  require_same_field(a, b);
  if (a.field_->is_rationals()) return a.rat_ == b.rat_;
  return a.coeffs_ == b.coeffs_;
}

bool operator<(const FieldElem& a, const FieldElem& b) {
  require_same_field(a, b);
  if (a.field_->is_rationals()) return a.rat_ < b.rat_;
  return a.index() < b.index();
}

FieldElem FieldElem::pow(std::int64_t e) const {
  if (!field_) raise(errc::field_mismatch, "empty element");
  if (e < 0) return inv().pow(-e);
  FieldElem base = *this;
  FieldElem acc = field_->one();
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

FieldElem FieldElem::frobenius() const {
  if (!field_) raise(errc::field_mismatch, "empty element");
  if (field_->is_rationals()) return *this;
  return pow(field_->characteristic());
}

FieldElem sqrt_char2(const FieldElem& a) {
  if (!a.field()) raise(errc::field_mismatch, "empty element");
  if (a.field()->characteristic() != 2) {
    raise(errc::wrong_characteristic, "sqrt_char2 needs characteristic 2");
  }
  // Squaring is the Frobenius, a bijection; the root is a^(2^(k-1)).
  std::int64_t e = 1;
  for (int i = 0; i < a.field()->extension_degree() - 1; ++i) e *= 2;
  return a.pow(e);
}

std::optional<FieldElem> try_sqrt(const FieldElem& a) {
  const FieldPtr& f = a.field();
  if (!f) raise(errc::field_mismatch, "empty element");
  if (f->is_rationals()) {
    const Rational& r = a.rational();
    if (r < 0) return std::nullopt;
    BigInt num = numerator(r), den = denominator(r);
    BigInt sn = sqrt(num), sd = sqrt(den);
    if (sn * sn != num || sd * sd != den) return std::nullopt;
    return f->from_rational(Rational(sn) / Rational(sd));
  }
  if (f->characteristic() == 2) return sqrt_char2(a);
  for (std::int64_t i = 0; i < f->order(); ++i) {
    FieldElem x = f->element_at(i);
    if (x * x == a) return x;
  }
  return std::nullopt;
}

P1Point P1Point::finite(FieldElem value) {
  if (!value.field()) raise(errc::field_mismatch, "empty element");
  FieldPtr f = value.field();
  return P1Point(std::move(f), false, std::move(value));
}

P1Point P1Point::infinity(FieldPtr field) {
  if (!field) raise(errc::field_mismatch, "empty field");
  FieldElem zero = field->zero();
  return P1Point(std::move(field), true, std::move(zero));
}

const FieldElem& P1Point::value() const {
  if (infinite_) raise(errc::indeterminate_point, "the point at infinity has no affine value");
  return value_;
}

bool operator==(const P1Point& a, const P1Point& b) {
  if (!a.field_->same_as(*b.field_)) raise(errc::field_mismatch, "points over different fields");
  if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
  return a.value_ == b.value_;
}

bool operator<(const P1Point& a, const P1Point& b) {
  if (a.infinite_) return false;
  if (b.infinite_) return true;
  return a.value_ < b.value_;
}

P1Point p1_normalize(const FieldElem& num, const FieldElem& den) {
  require_same_field(num, den);
  if (den.is_zero()) {
    if (num.is_zero()) raise(errc::indeterminate_point, "0/0 does not name a point");
    return P1Point::infinity(num.field());
  }
  return P1Point::finite(num / den);
}

std::vector<P1Point> p1_points(const FieldPtr& field) {
  if (!field || field->is_rationals()) {
    raise(errc::scale_cap, "P^1 enumeration needs a finite field");
  }
  std::vector<P1Point> pts;
  pts.reserve(static_cast<std::size_t>(field->order()) + 1);
  for (std::int64_t i = 0; i < field->order(); ++i) {
    pts.push_back(P1Point::finite(field->element_at(i)));
  }
  pts.push_back(P1Point::infinity(field));
  return pts;
}

const char* errc_name(errc code) {
  switch (code) {
    case errc::composite_characteristic: return "CompositeCharacteristic";
    case errc::unsupported_degree: return "UnsupportedDegree";
    case errc::scale_cap: return "ScaleCap";
    case errc::division_by_zero: return "DivisionByZero";
    case errc::field_mismatch: return "FieldMismatch";
    case errc::wrong_characteristic: return "WrongCharacteristic";
    case errc::indeterminate_point: return "IndeterminatePoint";
    case errc::disconnected: return "Disconnected";
    case errc::duplicate_marking: return "DuplicateMarking";
    case errc::dangling_reference: return "DanglingReference";
    case errc::duplicate_vertex: return "DuplicateVertex";
    case errc::invalid_genus: return "InvalidGenus";
    case errc::contracted_with_degree: return "ContractedWithDegree";
    case errc::non_adjacent_image: return "NonAdjacentImage";
    case errc::leg_mismatch: return "LegMismatch";
    case errc::invalid_behavior: return "InvalidBehavior";
    case errc::parity_error: return "ParityError";
    case errc::negative_genus: return "NegativeGenus";
    case errc::degenerate_lambda: return "DegenerateLambda";
    case errc::not_singular: return "NotSingular";
    case errc::singular_curve: return "SingularCurve";
    case errc::not_on_fiber: return "NotOnFiber";
    case errc::parse_error: return "ParseError";
    case errc::usage_error: return "UsageError";
  }
  return "UnknownError";
}

}  // namespace hf
