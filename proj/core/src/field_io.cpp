#include "hf/field_io.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

namespace hf {

namespace {

std::string format_rational(const Rational& r) {
  std::ostringstream out;
  out << numerator(r);
  if (denominator(r) != 1) out << "/" << denominator(r);
  return out.str();
}

struct Scanner {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool take(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  BigInt integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) raise(errc::parse_error, "expected a digit in '" + text + "'");
    return BigInt(text.substr(start, pos - start));
  }
};

}  // namespace

std::string format_elem(const FieldElem& a) {
  const FieldPtr& f = a.field();
  if (!f) raise(errc::field_mismatch, "empty element");
  if (f->is_rationals()) return format_rational(a.rational());
  if (f->extension_degree() == 1) return std::to_string(a.coeffs()[0]);
  if (a.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int d = f->extension_degree() - 1; d >= 0; --d) {
    std::int64_t c = a.coeffs()[d];
    if (c == 0) continue;
    if (!first) out << "+";
    first = false;
    if (d == 0) {
      out << c;
    } else {
      if (c != 1) out << c << "*";
      out << "t";
      if (d > 1) out << "^" << d;
    }
  }
  return out.str();
}

std::string format_p1(const P1Point& a) {
  return a.is_infinity() ? "inf" : format_elem(a.value());
}

FieldElem parse_elem(const std::string& text, const FieldPtr& field) {
  if (!field) raise(errc::field_mismatch, "empty field");
  Scanner sc{text};
  if (sc.eof()) raise(errc::parse_error, "empty element literal");

  if (field->is_rationals()) {
    bool neg = false;
    if (sc.take('-')) neg = true;
    else sc.take('+');
    BigInt num = sc.integer();
    BigInt den = 1;
    if (sc.take('/')) den = sc.integer();
    if (!sc.eof()) raise(errc::parse_error, "trailing input in '" + text + "'");
    if (den == 0) raise(errc::division_by_zero, "zero denominator in '" + text + "'");
    Rational r = Rational(num) / Rational(den);
    return field->from_rational(neg ? -r : r);
  }

  // Finite field: sum of signed terms c, t, c*t^e, t^e.
  std::vector<std::int64_t> coeffs(field->extension_degree(), 0);
  const std::int64_t p = field->characteristic();
  bool first_term = true;
  while (!sc.eof()) {
    std::int64_t sign = 1;
    if (sc.take('-')) sign = -1;
    else if (sc.take('+')) sign = 1;
    else if (!first_term) raise(errc::parse_error, "expected '+' or '-' in '" + text + "'");
    first_term = false;

    std::int64_t coeff = 1;
    bool saw_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(sc.peek()))) {
      BigInt v = sc.integer();
      coeff = static_cast<std::int64_t>(v % BigInt(p));
      saw_coeff = true;
      sc.take('*');
    }
    int degree = 0;
    if (sc.take('t')) {
      degree = 1;
      if (sc.take('^')) {
        BigInt e = sc.integer();
        if (e < 0 || e > 64) raise(errc::parse_error, "exponent out of range in '" + text + "'");
        degree = static_cast<int>(e);
      }
    } else if (!saw_coeff) {
      raise(errc::parse_error, "expected a term in '" + text + "'");
    }
    if (degree >= field->extension_degree()) {
      raise(errc::parse_error, "degree " + std::to_string(degree) + " term does not fit in " +
                                   format_field_spec(*field));
    }
    coeffs[degree] = ((coeffs[degree] + sign * coeff) % p + p) % p;
  }
  return field->from_coeffs(std::move(coeffs));
}

P1Point parse_p1(const std::string& text, const FieldPtr& field) {
  Scanner sc{text};
  sc.skip_ws();
  if (text.compare(sc.pos, 3, "inf") == 0) {
    Scanner rest{text};
    rest.pos = sc.pos + 3;
    if (rest.eof()) return P1Point::infinity(field);
  }
  return P1Point::finite(parse_elem(text, field));
}

FieldPtr parse_field_spec(const std::string& spec) {
  if (spec == "q" || spec == "Q" || spec == "0") return Field::rationals();
  Scanner sc{spec};
  if (sc.eof()) raise(errc::parse_error, "empty field spec");
  BigInt p = sc.integer();
  BigInt k = 1;
  if (sc.take('^')) k = sc.integer();
  if (!sc.eof()) raise(errc::parse_error, "trailing input in field spec '" + spec + "'");
  if (p > BigInt(1) << 40 || k > 64) raise(errc::scale_cap, "field spec out of range");
  return Field::make(static_cast<std::int64_t>(p), static_cast<int>(k));
}

std::string format_field_spec(const Field& f) {
  if (f.is_rationals()) return "Q";
  std::string out = std::to_string(f.characteristic());
  if (f.extension_degree() > 1) out += "^" + std::to_string(f.extension_degree());
  return out;
}

}  // namespace hf
