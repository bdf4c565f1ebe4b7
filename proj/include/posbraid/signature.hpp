#pragma once

#include <cstddef>
#include <vector>

#include "posbraid/matrix.hpp"

namespace posbraid {

struct SignatureResult {
  std::size_t positives = 0;
  std::size_t negatives = 0;
  std::size_t nullity = 0;

  long signature() const { return static_cast<long>(positives) - static_cast<long>(negatives); }
  std::size_t dim() const { return positives + negatives + nullity; }
  friend bool operator==(const SignatureResult&, const SignatureResult&) = default;
};

/// Inertia by symmetric congruence elimination over Q.
///
/// Pivots on the first nonzero diagonal entry among the remaining indices.
/// When every remaining diagonal entry vanishes but some M_ij does not
/// (i < j, lowest such pair), row/column j is added into i, which puts
/// 2 M_ij on the diagonal. Indices whose rows become zero count as nullity.
inline SignatureResult signature(const SymmetricMatrix& m) {
  const std::size_t n = m.dim();
  std::vector<Rational> a(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j);
  }
  auto at = [&](std::size_t i, std::size_t j) -> Rational& { return a[i * n + j]; };

  std::vector<std::size_t> active(n);
  for (std::size_t i = 0; i < n; ++i) active[i] = i;

  SignatureResult out;
  Rational factor;
  while (!active.empty()) {
    std::size_t pivot_slot = active.size();
    for (std::size_t s = 0; s < active.size(); ++s) {
      if (sgn(at(active[s], active[s])) != 0) {
        pivot_slot = s;
        break;
      }
    }
    if (pivot_slot == active.size()) {
      bool found = false;
      for (std::size_t s = 0; s < active.size() && !found; ++s) {
        for (std::size_t t = s + 1; t < active.size() && !found; ++t) {
          const std::size_t i = active[s];
          const std::size_t j = active[t];
          if (sgn(at(i, j)) == 0) continue;
          // row_i += row_j, then col_i += col_j
          for (std::size_t k : active) at(i, k) += at(j, k);
          for (std::size_t k : active) at(k, i) += at(k, j);
          pivot_slot = s;
          found = true;
        }
      }
      if (!found) break;  // remaining block is zero
    }
    const std::size_t p = active[pivot_slot];
    const Rational pivot = at(p, p);
    if (sgn(pivot) > 0) {
      ++out.positives;
    } else {
      ++out.negatives;
    }
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(pivot_slot));
    for (std::size_t r : active) {
      if (sgn(at(r, p)) == 0) continue;
      factor = at(r, p) / pivot;
      for (std::size_t c : active) {
        if (c < r) continue;
        if (sgn(at(p, c)) == 0) continue;
        at(r, c) -= factor * at(p, c);
      }
    }
    for (std::size_t r : active) {
      for (std::size_t c : active) {
        if (c < r) at(r, c) = at(c, r);
      }
    }
  }
  out.nullity = n - out.positives - out.negatives;
  return out;
}

/// Convenience overload for row data of unknown symmetry.
inline SignatureResult signature(const std::vector<std::vector<Rational>>& rows) {
  return signature(SymmetricMatrix::from_rows(rows));
}

}  // namespace posbraid
