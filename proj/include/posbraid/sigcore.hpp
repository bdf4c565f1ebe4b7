#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <span>
#include <utility>
#include <vector>

#include "posbraid/errors.hpp"
#include "posbraid/matrix.hpp"
#include "posbraid/signature.hpp"

namespace posbraid {

/// T(d_1, ..., d_n): given diagonal, ones on both secondary diagonals.
inline SymmetricMatrix tridiagonal(std::span<const long> diagonal) {
  SymmetricMatrix m(diagonal.size());
  for (std::size_t i = 0; i < diagonal.size(); ++i) {
    m.set(i, i, Rational(diagonal[i]));
    if (i + 1 < diagonal.size()) m.set(i, i + 1, Rational(1));
  }
  return m;
}

inline SymmetricMatrix tridiagonal(std::initializer_list<long> diagonal) {
  return tridiagonal(std::span<const long>(diagonal.begin(), diagonal.size()));
}

/// Diagonal of T(2^a, 1, 2^b).
inline std::vector<long> block_diagonal(int a, int b) {
  std::vector<long> d(static_cast<std::size_t>(a), 2);
  d.push_back(1);
  d.insert(d.end(), static_cast<std::size_t>(b), 2);
  return d;
}

/// Closed form for the signature of T(2^a, 1, 2^b).
inline long porism_signature(int a, int b) {
  if (a < 0 || b < 0) throw InputError("porism_signature: exponents must be nonnegative");
  const long dim = a + b + 1;
  if (std::min(a, b) == 0) return dim;
  if (a == 1 && b == 1) return dim - 1;
  return dim - 2;
}

/// Sum of the negative diagonal entries.
inline long lower_trace(std::span<const long> diagonal) {
  long s = 0;
  for (long d : diagonal) {
    if (d < 0) s += d;
  }
  return s;
}

/// Sum of the positive diagonal entries.
inline long upper_trace(std::span<const long> diagonal) {
  long s = 0;
  for (long d : diagonal) {
    if (d > 0) s += d;
  }
  return s;
}

struct TrisumBlock {
  int a = 0;  ///< twos before the 1
  int b = 0;  ///< twos after the 1
  std::size_t attach = 0;  ///< 0-based core index g(i); core[attach] must be <= 0

  std::size_t dim() const { return static_cast<std::size_t>(a + b + 1); }
  friend bool operator==(const TrisumBlock&, const TrisumBlock&) = default;
};

/// A core tridiagonal T(core) plus blocks T(2^a,1,2^b), each tied to the core
/// by a single unit entry between the block's 1 and a nonpositive core entry.
struct TrisumSpec {
  std::vector<long> core;
  std::vector<TrisumBlock> blocks;

  std::size_t dim() const {
    std::size_t d = core.size();
    for (const auto& b : blocks) d += b.dim();
    return d;
  }
  /// b(M): total block dimension.
  long block_dim() const {
    long d = 0;
    for (const auto& b : blocks) d += static_cast<long>(b.dim());
    return d;
  }
  long core_lower_trace() const { return lower_trace(core); }

  void validate() const {
    for (const auto& b : blocks) {
      if (b.a < 0 || b.b < 0) throw InputError("trisum block exponents must be nonnegative");
      if (b.attach >= core.size()) throw InputError("trisum attachment index outside the core");
      if (core[b.attach] > 0) {
        throw InputError("trisum block attached to a positive core entry (index " +
                         std::to_string(b.attach) + ")");
      }
    }
  }
  friend bool operator==(const TrisumSpec&, const TrisumSpec&) = default;
};

/// Column h(i) of each block's diagonal 1 in the realized matrix.
inline std::vector<std::size_t> trisum_one_columns(const TrisumSpec& spec) {
  std::vector<std::size_t> h;
  std::size_t offset = spec.core.size();
  for (const auto& b : spec.blocks) {
    h.push_back(offset + static_cast<std::size_t>(b.a));
    offset += b.dim();
  }
  return h;
}

/// Core first, then blocks in order; M[g(i)][h(i)] = 1.
inline SymmetricMatrix realize_trisum(const TrisumSpec& spec) {
  spec.validate();
  std::vector<SymmetricMatrix> parts;
  parts.push_back(tridiagonal(spec.core));
  for (const auto& b : spec.blocks) parts.push_back(tridiagonal(block_diagonal(b.a, b.b)));
  SymmetricMatrix m = direct_sum(parts);
  const auto h = trisum_one_columns(spec);
  for (std::size_t i = 0; i < spec.blocks.size(); ++i) m.set(spec.blocks[i].attach, h[i], 1);
  return m;
}

struct BoundCheck {
  bool holds = false;
  long signature = 0;
  Rational bound;
  Rational slack;  ///< signature - bound
};

/// sigma(T(d)) >= -1/2 + lower_trace(d)/2.
inline BoundCheck check_prop32(std::span<const long> diagonal) {
  BoundCheck c;
  c.signature = signature(tridiagonal(diagonal)).signature();
  c.bound = half(-1 + lower_trace(diagonal));
  c.slack = Rational(c.signature) - c.bound;
  c.holds = sgn(c.slack) >= 0;
  return c;
}

/// sigma(M) >= -1/2 + lower_trace(core)/2 + b(M)/2.
inline BoundCheck check_prop34(const TrisumSpec& spec) {
  BoundCheck c;
  c.signature = signature(realize_trisum(spec)).signature();
  c.bound = half(-1 + spec.core_lower_trace() + spec.block_dim());
  c.slack = Rational(c.signature) - c.bound;
  c.holds = sgn(c.slack) >= 0;
  return c;
}

}  // namespace posbraid
