#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "hf/field.hpp"

namespace hf {

// A transposition (a b) of {1..d}, stored with a < b.
struct Transposition {
  int a = 1, b = 2;

  friend bool operator==(const Transposition& x, const Transposition& y) {
    return x.a == y.a && x.b == y.b;
  }
  friend bool operator<(const Transposition& x, const Transposition& y) {
    return x.a != y.a ? x.a < y.a : x.b < y.b;
  }
};

// A branching datum: an ordered tuple of transpositions in S_degree,
// multiplied left to right. Valid tuples have identity product and generate
// a transitive subgroup.
struct MonodromyTuple {
  int degree = 1;
  std::vector<Transposition> factors;

  friend bool operator==(const MonodromyTuple& x, const MonodromyTuple& y) {
    return x.degree == y.degree && x.factors == y.factors;
  }
  friend bool operator<(const MonodromyTuple& x, const MonodromyTuple& y) {
    return x.factors < y.factors;
  }
};

bool product_is_identity(const MonodromyTuple& tuple);
bool is_transitive(const MonodromyTuple& tuple);
std::vector<Violation> check_tuple(const MonodromyTuple& tuple);
// Throws on the first violation.
void validate_tuple(const MonodromyTuple& tuple);

// Backtracking enumeration of all valid n-tuples in S_d, in lexicographic
// order of the factor sequences. Desk-scale caps: d <= 6, n <= 10. The
// search prunes on the minimum-transposition distance back to the identity
// (with its parity) and on whether the remaining factors can still merge
// the current orbits.
void for_each_simple_monodromy(int d, int n,
                               const std::function<void(const MonodromyTuple&)>& visit);
std::vector<MonodromyTuple> enumerate_simple_monodromy(int d, int n);
// Same search without materializing; subtrees split by first factor run
// concurrently, the total is schedule-independent.
std::int64_t count_simple_monodromy(int d, int n);

// |enumerate_simple_monodromy(d, n)| / d!.
Rational hurwitz_number(int d, int n);

// Independent route, never shared with the backtracking search: iterated
// convolution over the group algebra of S_d counts identity products with
// no transitivity requirement (d <= 6, n <= 12)...
std::int64_t convolution_identity_count(int d, int n);
// ...and conditioning on the block of the first symbol turns those counts
// into transitive ones (the inclusion-exclusion over set partitions,
// organized through the block containing symbol 1).
std::int64_t convolution_transitive_count(int d, int n);

// Genus of the cover a valid tuple encodes (target P^1, simple branching).
int tuple_genus(const MonodromyTuple& tuple);

}  // namespace hf
