#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "posbraid/matrix.hpp"
#include "posbraid/rational.hpp"
#include "posbraid/sigcore.hpp"
#include "posbraid/signature.hpp"

namespace posbraid {

struct FuzzSummary {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::optional<std::string> counterexample;  ///< first failure in enumeration order

  void fail(std::string what) {
    ++failures;
    if (!counterexample) counterexample = std::move(what);
  }
};

inline std::string diagonal_string(std::span<const long> d) {
  std::ostringstream os;
  os << "T(";
  for (std::size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
  os << ")";
  return os.str();
}

inline std::string spec_string(const TrisumSpec& s) {
  std::ostringstream os;
  os << "core=" << diagonal_string(s.core) << " blocks=[";
  for (std::size_t i = 0; i < s.blocks.size(); ++i) {
    os << (i ? " " : "") << "(" << s.blocks[i].a << "," << s.blocks[i].b << ")@" << s.blocks[i].attach + 1;
  }
  os << "]";
  return os.str();
}

/// Every tridiagonal T(d) with d in {lo..hi}^k for 1 <= k <= max_dim, in
/// order of dimension then lexicographically. Checks the lower bound
/// sigma >= -1/2 + lower_trace/2 and the mirrored upper bound
/// sigma <= 1/2 + upper_trace.
inline FuzzSummary fuzz_tridiagonal_exhaustive(int max_dim, long lo = -2, long hi = 2) {
  FuzzSummary s;
  for (int k = 1; k <= max_dim; ++k) {
    std::vector<long> d(static_cast<std::size_t>(k), lo);
    while (true) {
      ++s.cases;
      const auto lower = check_prop32(d);
      if (!lower.holds) s.fail(diagonal_string(d) + " lower bound, sigma=" + std::to_string(lower.signature));
      if (Rational(2 * lower.signature) > Rational(1 + 2 * upper_trace(d))) {
        s.fail(diagonal_string(d) + " upper bound, sigma=" + std::to_string(lower.signature));
      }
      int pos = k - 1;
      while (pos >= 0 && d[static_cast<std::size_t>(pos)] == hi) d[static_cast<std::size_t>(pos--)] = lo;
      if (pos < 0) break;
      ++d[static_cast<std::size_t>(pos)];
    }
  }
  return s;
}

/// Core length 1..max_core with entries in [-5, 5]; up to max_blocks blocks
/// with a, b <= max_ab, each attached at a uniformly chosen nonpositive core
/// entry (none if the core has no such entry).
inline TrisumSpec random_trisum_spec(std::mt19937& rng, int max_core = 6, int max_blocks = 3, int max_ab = 3) {
  TrisumSpec spec;
  const int r = std::uniform_int_distribution<int>(1, max_core)(rng);
  std::uniform_int_distribution<long> entry(-5, 5);
  for (int i = 0; i < r; ++i) spec.core.push_back(entry(rng));
  std::vector<std::size_t> sites;
  for (std::size_t i = 0; i < spec.core.size(); ++i)
    if (spec.core[i] <= 0) sites.push_back(i);
  const int blocks = sites.empty() ? 0 : std::uniform_int_distribution<int>(0, max_blocks)(rng);
  std::uniform_int_distribution<int> ab(0, max_ab);
  std::uniform_int_distribution<std::size_t> site(0, sites.empty() ? 0 : sites.size() - 1);
  for (int i = 0; i < blocks; ++i) {
    const int a = ab(rng);
    const int b = ab(rng);
    spec.blocks.push_back({a, b, sites[site(rng)]});
  }
  return spec;
}

inline FuzzSummary fuzz_trisum_random(std::size_t count, std::uint32_t seed) {
  FuzzSummary s;
  std::mt19937 rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    const auto spec = random_trisum_spec(rng);
    ++s.cases;
    const auto c = check_prop34(spec);
    if (!c.holds) s.fail(spec_string(spec) + " sigma=" + std::to_string(c.signature));
  }
  return s;
}

/// Random symmetric matrix of dimension 1..max_dim. Half the draws are
/// C^T E C with C of smaller rank, so that nullity is exercised.
inline SymmetricMatrix random_symmetric(std::mt19937& rng, std::size_t max_dim) {
  const auto d = std::uniform_int_distribution<std::size_t>(1, max_dim)(rng);
  std::uniform_int_distribution<long> small(-4, 4);
  SymmetricMatrix m(d);
  if (std::bernoulli_distribution(0.5)(rng)) {
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i; j < d; ++j) m.set(i, j, Rational(small(rng)));
    return m;
  }
  const auto k = std::uniform_int_distribution<std::size_t>(0, d)(rng);
  std::vector<std::vector<long>> c(k, std::vector<long>(d));
  for (auto& row : c)
    for (auto& v : row) v = small(rng);
  std::vector<long> e(k);
  for (auto& v : e) v = small(rng);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      long sum = 0;
      for (std::size_t r = 0; r < k; ++r) sum += c[r][i] * e[r] * c[r][j];
      m.set(i, j, Rational(sum));
    }
  }
  return m;
}

/// Random invertible rational matrix as a product of a permutation, a unit
/// lower triangular, a nonzero rational diagonal and a unit upper triangular
/// factor.
inline std::vector<std::vector<Rational>> random_invertible(std::mt19937& rng, std::size_t d) {
  std::uniform_int_distribution<long> small(-3, 3);
  std::uniform_int_distribution<long> nonzero(1, 5);
  std::vector<std::vector<Rational>> lower(d, std::vector<Rational>(d)), upper(d, std::vector<Rational>(d));
  for (std::size_t i = 0; i < d; ++i) {
    lower[i][i] = 1;
    Rational diag(Integer(nonzero(rng)), Integer(nonzero(rng)));
    diag.canonicalize();
    if (std::bernoulli_distribution(0.5)(rng)) diag = -diag;
    upper[i][i] = diag;
    for (std::size_t j = 0; j < i; ++j) lower[i][j] = small(rng);
    for (std::size_t j = i + 1; j < d; ++j) upper[i][j] = diag * small(rng);
  }
  std::vector<std::size_t> perm(d);
  for (std::size_t i = 0; i < d; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::vector<Rational>> p(d, std::vector<Rational>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Rational sum = 0;
      for (std::size_t k = 0; k <= std::min(i, j); ++k) sum += lower[i][k] * upper[k][j];
      p[perm[i]][j] = sum;
    }
  return p;
}

/// Congruences P^T M P with random symmetric M and random invertible P;
/// signature and nullity must both survive.
inline FuzzSummary fuzz_congruence(std::size_t count, std::size_t max_dim, std::uint32_t seed) {
  FuzzSummary s;
  std::mt19937 rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    const auto m = random_symmetric(rng, max_dim);
    const auto p = random_invertible(rng, m.dim());
    const auto before = signature(m);
    const auto after = signature(m.congruent(p));
    ++s.cases;
    if (before.signature() != after.signature() || before.nullity != after.nullity) {
      s.fail("case " + std::to_string(i) + ": dim " + std::to_string(m.dim()) + " sigma " +
             std::to_string(before.signature()) + " -> " + std::to_string(after.signature()));
    }
  }
  return s;
}

}  // namespace posbraid
