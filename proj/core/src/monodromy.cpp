#include "hf/monodromy.hpp"

#include <algorithm>
#include <array>
#include <future>
#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <utility>

#include "hf/errors.hpp"
#include "hf/stable_map.hpp"

namespace hf {
namespace {

constexpr int kMaxDegree = 6;
constexpr int kMaxFactors = 10;
constexpr int kMaxConvolutionFactors = 12;
// enumerate_simple_monodromy refuses to materialize more tuples than this;
// the streaming and counting entry points stay available at full cap scale.
constexpr std::int64_t kMaxMaterialized = 20'000'000;

constexpr std::int64_t kFactorial[7] = {1, 1, 2, 6, 24, 120, 720};

void require_degree(int d, int cap) {
  if (d < 1) raise(errc::unsupported_degree, "degree must be at least 1, got " + std::to_string(d));
  if (d > cap)
    raise(errc::scale_cap,
          "degree " + std::to_string(d) + " exceeds the desk-scale cap " + std::to_string(cap));
}

void require_factor_count(int n, int cap) {
  if (n < 0) raise(errc::usage_error, "factor count must be nonnegative, got " + std::to_string(n));
  if (n > cap)
    raise(errc::scale_cap, "factor count " + std::to_string(n) + " exceeds the desk-scale cap " +
                               std::to_string(cap));
}

std::vector<Transposition> all_transpositions(int d) {
  std::vector<Transposition> out;
  for (int a = 1; a <= d; ++a)
    for (int b = a + 1; b <= d; ++b) out.push_back({a, b});
  return out;
}

// Depth-first enumeration over factor sequences, lexicographic in the
// transposition order (1,2) < (1,3) < ... < (d-1,d). Two cuts keep the tree
// small: the current product needs at least d - cycles(product) further
// transpositions (matching parity) to cancel, and the orbits of the chosen
// prefix can merge by at most one per remaining factor.
struct Searcher {
  int d = 1;
  int n = 0;
  std::vector<Transposition> ts;
  std::array<int, kMaxDegree> perm{};
  std::array<int, kMaxDegree> inv{};
  std::vector<std::array<int, kMaxDegree>> parent;  // orbit state per depth
  std::vector<int> orbits;
  std::vector<Transposition> factors;
  std::function<void(const std::vector<Transposition>&)> emit;

  Searcher(int d_, int n_) : d(d_), n(n_), ts(all_transpositions(d_)) {
    for (int i = 0; i < d; ++i) perm[i] = inv[i] = i;
    parent.assign(n + 1, {});
    std::iota(parent[0].begin(), parent[0].begin() + d, 0);
    orbits.assign(n + 1, d);
    factors.reserve(n);
  }

  static int find(std::array<int, kMaxDegree>& par, int x) {
    while (par[x] != x) {
      par[x] = par[par[x]];
      x = par[x];
    }
    return x;
  }

  // Appending (a b) sends x to (a b)(perm(x)); an involution, so applying
  // twice undoes it.
  void apply(const Transposition& t) {
    const int a = t.a - 1, b = t.b - 1;
    const int x = inv[a], y = inv[b];
    perm[x] = b;
    perm[y] = a;
    inv[a] = y;
    inv[b] = x;
  }

  int cycle_count() const {
    bool seen[kMaxDegree] = {};
    int c = 0;
    for (int i = 0; i < d; ++i) {
      if (seen[i]) continue;
      ++c;
      for (int j = i; !seen[j]; j = perm[j]) seen[j] = true;
    }
    return c;
  }

  // Enters a subtree whose prefix occupies factors[0..depth). Placing the
  // prefix's orbit data at parent[depth]/orbits[depth] is the caller's job.
  void run(int depth) {
    const int remaining = n - depth;
    const int needed = d - cycle_count();
    if (needed > remaining || ((remaining - needed) & 1)) return;
    if (orbits[depth] - 1 > remaining) return;
    if (depth == n) {
      // The cuts leave only identity products over a single orbit here.
      emit(factors);
      return;
    }
    for (const auto& t : ts) {
      apply(t);
      parent[depth + 1] = parent[depth];
      orbits[depth + 1] = orbits[depth];
      const int ra = find(parent[depth + 1], t.a - 1);
      const int rb = find(parent[depth + 1], t.b - 1);
      if (ra != rb) {
        parent[depth + 1][ra] = rb;
        --orbits[depth + 1];
      }
      factors.push_back(t);
      run(depth + 1);
      factors.pop_back();
      apply(t);
    }
  }

  // Seeds the search with a fixed first factor, for splitting by prefix.
  void run_with_first(const Transposition& t) {
    apply(t);
    parent[1] = parent[0];
    orbits[1] = orbits[0];
    const int ra = find(parent[1], t.a - 1);
    const int rb = find(parent[1], t.b - 1);
    if (ra != rb) {
      parent[1][ra] = rb;
      --orbits[1];
    }
    factors.push_back(t);
    run(1);
  }
};

std::array<int, kMaxDegree> apply_to_array(const std::array<int, kMaxDegree>& p,
                                           const Transposition& t, int d) {
  std::array<int, kMaxDegree> out = p;
  for (int x = 0; x < d; ++x) {
    if (out[x] == t.a - 1)
      out[x] = t.b - 1;
    else if (out[x] == t.b - 1)
      out[x] = t.a - 1;
  }
  return out;
}

int lehmer_rank(const std::array<int, kMaxDegree>& p, int d) {
  int r = 0;
  for (int i = 0; i < d; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < d; ++j) smaller += p[j] < p[i] ? 1 : 0;
    r += smaller * static_cast<int>(kFactorial[d - 1 - i]);
  }
  return r;
}

// Number of length-n transposition sequences in S_d with identity product,
// transitive or not: push the distribution through n convolution steps and
// read off the mass at the identity.
std::int64_t identity_count_impl(int d, int n) {
  const auto ts = all_transpositions(d);
  const auto size = static_cast<std::size_t>(kFactorial[d]);
  std::vector<std::array<int, kMaxDegree>> perms;
  perms.reserve(size);
  std::array<int, kMaxDegree> base{};
  std::iota(base.begin(), base.begin() + d, 0);
  do {
    perms.push_back(base);
  } while (std::next_permutation(base.begin(), base.begin() + d));

  std::vector<std::vector<int>> step(perms.size(), std::vector<int>(ts.size()));
  for (std::size_t i = 0; i < perms.size(); ++i)
    for (std::size_t j = 0; j < ts.size(); ++j)
      step[i][j] = lehmer_rank(apply_to_array(perms[i], ts[j], d), d);

  std::vector<std::int64_t> vec(perms.size(), 0);
  vec[0] = 1;  // lexicographically first permutation is the identity
  for (int m = 0; m < n; ++m) {
    std::vector<std::int64_t> next(perms.size(), 0);
    for (std::size_t i = 0; i < perms.size(); ++i) {
      if (vec[i] == 0) continue;
      for (std::size_t j = 0; j < ts.size(); ++j) next[step[i][j]] += vec[i];
    }
    vec.swap(next);
  }
  return vec[0];
}

std::int64_t cached_identity_count(int d, int n) {
  static std::map<std::pair<int, int>, std::int64_t> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  const auto key = std::make_pair(d, n);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, identity_count_impl(d, n)).first;
  return it->second;
}

std::int64_t binomial(int n, int k) {
  static std::int64_t table[13][13];
  static std::once_flag once;
  std::call_once(once, [] {
    for (int i = 0; i <= 12; ++i) {
      table[i][0] = 1;
      for (int j = 1; j <= i; ++j)
        table[i][j] = table[i - 1][j - 1] + (j <= i - 1 ? table[i - 1][j] : 0);
    }
  });
  return table[n][k];
}

// Identity-product sequences with no transitivity demand, restricted to a
// support of a given size: symbols split into the block of symbol 1 and its
// complement, factors split accordingly, and the block contribution must be
// transitive. Subtracting every proper split leaves the transitive count.
std::int64_t transitive_count_impl(int d, int n);

std::int64_t cached_transitive_count(int d, int n) {
  static std::map<std::pair<int, int>, std::int64_t> cache;
  static std::mutex mutex;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(std::make_pair(d, n));
    if (it != cache.end()) return it->second;
  }
  const std::int64_t value = transitive_count_impl(d, n);
  std::lock_guard<std::mutex> lock(mutex);
  cache.emplace(std::make_pair(d, n), value);
  return value;
}

std::int64_t transitive_count_impl(int d, int n) {
  std::int64_t total = cached_identity_count(d, n);
  for (int block = 1; block <= d; ++block) {
    for (int j = 0; j <= n; ++j) {
      if (block == d && j == n) continue;
      const int rest_d = d - block;
      const int rest_n = n - j;
      const std::int64_t outside =
          rest_d == 0 ? (rest_n == 0 ? 1 : 0) : cached_identity_count(rest_d, rest_n);
      if (outside == 0) continue;
      total -= binomial(d - 1, block - 1) * binomial(n, j) * cached_transitive_count(block, j) *
               outside;
    }
  }
  return total;
}

}  // namespace

bool product_is_identity(const MonodromyTuple& tuple) {
  std::vector<int> perm(tuple.degree);
  std::iota(perm.begin(), perm.end(), 0);
  for (const auto& t : tuple.factors)
    for (auto& image : perm) {
      if (image == t.a - 1)
        image = t.b - 1;
      else if (image == t.b - 1)
        image = t.a - 1;
    }
  for (int i = 0; i < tuple.degree; ++i)
    if (perm[i] != i) return false;
  return true;
}

bool is_transitive(const MonodromyTuple& tuple) {
  std::vector<int> par(tuple.degree);
  std::iota(par.begin(), par.end(), 0);
  const std::function<int(int)> find = [&](int x) {
    while (par[x] != x) {
      par[x] = par[par[x]];
      x = par[x];
    }
    return x;
  };
  int orbits = tuple.degree;
  for (const auto& t : tuple.factors) {
    const int ra = find(t.a - 1), rb = find(t.b - 1);
    if (ra != rb) {
      par[ra] = rb;
      --orbits;
    }
  }
  return orbits == 1;
}

std::vector<Violation> check_tuple(const MonodromyTuple& tuple) {
  std::vector<Violation> out;
  if (tuple.degree < 1) {
    out.push_back({errc::unsupported_degree, "tuple",
                   "degree must be at least 1, got " + std::to_string(tuple.degree)});
    return out;
  }
  for (std::size_t i = 0; i < tuple.factors.size(); ++i) {
    const auto& t = tuple.factors[i];
    if (t.a < 1 || t.b <= t.a || t.b > tuple.degree) {
      out.push_back({errc::dangling_reference, "factor " + std::to_string(i),
                     "(" + std::to_string(t.a) + " " + std::to_string(t.b) +
                         ") is not a transposition of 1.." + std::to_string(tuple.degree)});
      return out;
    }
  }
  if (!product_is_identity(tuple))
    out.push_back({errc::invalid_behavior, "product", "factor product is not the identity"});
  if (!is_transitive(tuple))
    out.push_back({errc::disconnected, "orbit", "factors do not act transitively"});
  return out;
}

void validate_tuple(const MonodromyTuple& tuple) {
  const auto violations = check_tuple(tuple);
  if (violations.empty()) return;
  std::string message;
  for (const auto& v : violations) {
    if (!message.empty()) message += "; ";
    message += v.element + ": " + v.message;
  }
  raise(violations.front().code, message);
}

void for_each_simple_monodromy(int d, int n,
                               const std::function<void(const MonodromyTuple&)>& visit) {
  require_degree(d, kMaxDegree);
  require_factor_count(n, kMaxFactors);
  Searcher searcher(d, n);
  searcher.emit = [&](const std::vector<Transposition>& factors) {
    visit(MonodromyTuple{d, factors});
  };
  searcher.run(0);
}

std::vector<MonodromyTuple> enumerate_simple_monodromy(int d, int n) {
  require_degree(d, kMaxDegree);
  require_factor_count(n, kMaxFactors);
  const std::int64_t expected = convolution_transitive_count(d, n);
  if (expected > kMaxMaterialized)
    raise(errc::scale_cap, "materializing " + std::to_string(expected) +
                               " tuples exceeds the cap of " + std::to_string(kMaxMaterialized) +
                               "; use the streaming or counting entry points");
  std::vector<MonodromyTuple> out;
  out.reserve(static_cast<std::size_t>(expected));
  for_each_simple_monodromy(d, n, [&](const MonodromyTuple& tuple) { out.push_back(tuple); });
  return out;
}

std::int64_t count_simple_monodromy(int d, int n) {
  require_degree(d, kMaxDegree);
  require_factor_count(n, kMaxFactors);
  if (n < 2 || d < 4) {
    std::int64_t count = 0;
    Searcher searcher(d, n);
    searcher.emit = [&](const std::vector<Transposition>&) { ++count; };
    searcher.run(0);
    return count;
  }
  // Independent subtrees per first factor; summing in factor order keeps the
  // result schedule-independent.
  const auto ts = all_transpositions(d);
  std::vector<std::future<std::int64_t>> parts;
  parts.reserve(ts.size());
  for (const auto& first : ts) {
    parts.push_back(std::async(std::launch::async, [d, n, first] {
      std::int64_t count = 0;
      Searcher searcher(d, n);
      searcher.emit = [&](const std::vector<Transposition>&) { ++count; };
      searcher.run_with_first(first);
      return count;
    }));
  }
  std::int64_t total = 0;
  for (auto& part : parts) total += part.get();
  return total;
}

Rational hurwitz_number(int d, int n) {
  const std::int64_t raw = count_simple_monodromy(d, n);
  return Rational(raw) / Rational(kFactorial[d]);
}

std::int64_t convolution_identity_count(int d, int n) {
  require_degree(d, kMaxDegree);
  require_factor_count(n, kMaxConvolutionFactors);
  return cached_identity_count(d, n);
}

std::int64_t convolution_transitive_count(int d, int n) {
  require_degree(d, kMaxDegree);
  require_factor_count(n, kMaxConvolutionFactors);
  return cached_transitive_count(d, n);
}

int tuple_genus(const MonodromyTuple& tuple) {
  validate_tuple(tuple);
  return riemann_hurwitz_genus(tuple.degree, 0, static_cast<int>(tuple.factors.size()));
}

}  // namespace hf
