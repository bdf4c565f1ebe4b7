#pragma once

#include <cstddef>
#include <vector>

#include "posbraid/braid.hpp"
#include "posbraid/errors.hpp"
#include "posbraid/matrix.hpp"
#include "posbraid/polynomial.hpp"
#include "posbraid/signature.hpp"

namespace posbraid {

/// Loop on the fibre surface through the bands of two consecutive s_i
/// crossings (word positions lower < upper; no wraparound).
struct Brick {
  int column = 0;
  int lower = 0;
  int upper = 0;
};

/// Seifert matrix of the Stallings fibre surface of a positive braid closure
/// in the basis of bricks, signs chosen so that positive braids have positive
/// signature:
///   V(x, x) = 1;
///   V(x, y) = -1 for x directly below y in one column;
///   for x = (i, a, b), y = (i+1, c, d):
///     a < c < b < d gives V(x, y) = -1,
///     c < a < d < b gives V(x, y) = +1;
///   all other entries vanish.
class SeifertMatrix {
 public:
  explicit SeifertMatrix(const BraidWord& w) {
    if (!w.is_nonsplit()) throw InputError("seifert_matrix: split braid word");
    for (int i = 1; i <= w.generators(); ++i) {
      int prev = -1;
      for (int p = 0; p < w.crossings(); ++p) {
        if (w[static_cast<std::size_t>(p)] != i) continue;
        if (prev >= 0) bricks_.push_back({i, prev, p});
        prev = p;
      }
    }
    const std::size_t m = bricks_.size();
    v_.assign(m * m, 0);
    for (std::size_t x = 0; x < m; ++x) {
      const Brick& bx = bricks_[x];
      v_[x * m + x] = 1;
      for (std::size_t y = 0; y < m; ++y) {
        const Brick& by = bricks_[y];
        if (by.column == bx.column && by.lower == bx.upper) v_[x * m + y] = -1;
        if (by.column == bx.column + 1) {
          if (bx.lower < by.lower && by.lower < bx.upper && bx.upper < by.upper) v_[x * m + y] = -1;
          if (by.lower < bx.lower && bx.lower < by.upper && by.upper < bx.upper) v_[x * m + y] = 1;
        }
      }
    }
  }

  std::size_t dim() const { return bricks_.size(); }
  const std::vector<Brick>& bricks() const { return bricks_; }
  long operator()(std::size_t i, std::size_t j) const { return v_[i * dim() + j]; }

  /// V + V^T.
  SymmetricMatrix symmetrized() const {
    SymmetricMatrix s(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
      for (std::size_t j = i; j < dim(); ++j) {
        const long v = (*this)(i, j) + (*this)(j, i);
        if (v != 0) s.set(i, j, Rational(v));
      }
    }
    return s;
  }

 private:
  std::vector<Brick> bricks_;
  std::vector<long> v_;
};

inline SeifertMatrix seifert_matrix(const BraidWord& w) { return SeifertMatrix(w); }

struct OracleSignature {
  long sigma = 0;
  long nullity = 0;
};

/// Signature and nullity of V + V^T.
inline OracleSignature oracle_signature_nullity(const BraidWord& w) {
  const auto r = signature(seifert_matrix(w).symmetrized());
  return {r.signature(), static_cast<long>(r.nullity)};
}

namespace detail {

/// Fraction-free (Bareiss) determinant.
inline Integer bareiss_determinant(std::vector<Integer> a, std::size_t n) {
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a[swap * n + k] == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a[k * n + c], a[swap * n + c]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i * n + j] = (a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j]);
        mpz_divexact(a[i * n + j].get_mpz_t(), a[i * n + j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[k * n + k];
  }
  return sign * a[n * n - 1];
}

/// Interpolates the integer polynomial of degree <= values.size()-1 through
/// (points[k], values[k]).
inline IntPolynomial interpolate(const std::vector<Integer>& points, const std::vector<Integer>& values) {
  const std::size_t n = points.size();
  std::vector<Rational> dd(values.begin(), values.end());
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t k = n - 1; k >= level; --k) {
      dd[k] = (dd[k] - dd[k - 1]) / Rational(points[k] - points[k - level]);
      if (k == level) break;
    }
  }
  std::vector<Rational> poly{dd[n - 1]};
  for (std::size_t k = n - 1; k-- > 0;) {
    // poly = poly * (t - points[k]) + dd[k]
    std::vector<Rational> next(poly.size() + 1);
    for (std::size_t j = 0; j < poly.size(); ++j) {
      next[j + 1] += poly[j];
      next[j] -= poly[j] * Rational(points[k]);
    }
    next[0] += dd[k];
    poly = std::move(next);
  }
  std::vector<Integer> coeffs;
  for (auto& c : poly) {
    if (c.get_den() != 1) throw ConsistencyError("interpolation produced a non-integer coefficient");
    coeffs.push_back(c.get_num());
  }
  return IntPolynomial(std::move(coeffs));
}

}  // namespace detail

/// det(V - t V^T), with powers of t divided out and positive leading coefficient.
inline IntPolynomial alexander(const BraidWord& w) {
  const SeifertMatrix v = seifert_matrix(w);
  const std::size_t m = v.dim();
  std::vector<Integer> points, values;
  for (std::size_t k = 0; k <= m; ++k) {
    const Integer t = Integer(static_cast<long>(k)) - Integer(static_cast<long>(m / 2));
    std::vector<Integer> a(m * m);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) a[i * m + j] = Integer(v(i, j)) - t * Integer(v(j, i));
    }
    points.push_back(t);
    values.push_back(detail::bareiss_determinant(std::move(a), m));
  }
  return detail::interpolate(points, values).normalized();
}

}  // namespace posbraid
