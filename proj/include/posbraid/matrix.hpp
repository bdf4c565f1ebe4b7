#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "posbraid/errors.hpp"
#include "posbraid/rational.hpp"

namespace posbraid {

/// Dense symmetric matrix over exact rationals. Every mutator writes both
/// (i, j) and (j, i), so symmetry is an invariant of the type.
class SymmetricMatrix {
 public:
  SymmetricMatrix() = default;
  explicit SymmetricMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

  /// Rejects ragged or non-symmetric input.
  static SymmetricMatrix from_rows(const std::vector<std::vector<Rational>>& rows) {
    SymmetricMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows.size()) throw InputError("matrix is not square");
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < rows.size(); ++j) {
        if (rows[i][j] != rows[j][i]) {
          throw InputError("matrix is not symmetric at (" + std::to_string(i) + ", " +
                           std::to_string(j) + ")");
        }
        m.data_[i * m.dim_ + j] = rows[i][j];
      }
    }
    return m;
  }

  static SymmetricMatrix from_integers(const std::vector<std::vector<long>>& rows) {
    std::vector<std::vector<Rational>> q(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (long v : rows[i]) q[i].emplace_back(v);
    }
    return from_rows(q);
  }

  std::size_t dim() const { return dim_; }
  bool empty() const { return dim_ == 0; }

  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

  void set(std::size_t i, std::size_t j, const Rational& v) {
    data_[i * dim_ + j] = v;
    data_[j * dim_ + i] = v;
  }

  /// Adds v to (i, j) and (j, i); a diagonal entry receives v once.
  void add(std::size_t i, std::size_t j, const Rational& v) {
    data_[i * dim_ + j] += v;
    if (i != j) data_[j * dim_ + i] += v;
  }

  /// Restriction to the coordinates `idx`, in that order.
  SymmetricMatrix principal(std::span<const std::size_t> idx) const {
    SymmetricMatrix m(idx.size());
    for (std::size_t a = 0; a < idx.size(); ++a) {
      for (std::size_t b = 0; b < idx.size(); ++b) {
        m.data_[a * m.dim_ + b] = (*this)(idx[a], idx[b]);
      }
    }
    return m;
  }

  /// P^T M P for a dim x k matrix P (row-major rows of length k).
  SymmetricMatrix congruent(const std::vector<std::vector<Rational>>& p) const {
    if (p.size() != dim_) throw InputError("congruence matrix has wrong row count");
    const std::size_t k = dim_ == 0 ? 0 : p.front().size();
    std::vector<Rational> mp(dim_ * k);
    for (std::size_t i = 0; i < dim_; ++i) {
      for (std::size_t c = 0; c < k; ++c) {
        Rational acc = 0;
        for (std::size_t l = 0; l < dim_; ++l) acc += (*this)(i, l) * p[l][c];
        mp[i * k + c] = acc;
      }
    }
    SymmetricMatrix out(k);
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = r; c < k; ++c) {
        Rational acc = 0;
        for (std::size_t l = 0; l < dim_; ++l) acc += p[l][r] * mp[l * k + c];
        out.set(r, c, acc);
      }
    }
    return out;
  }

  SymmetricMatrix negated() const {
    SymmetricMatrix m(*this);
    for (auto& v : m.data_) v = -v;
    return m;
  }

  bool is_zero_offdiagonal(std::size_t i, std::size_t j) const { return (*this)(i, j) == 0; }

  friend bool operator==(const SymmetricMatrix& a, const SymmetricMatrix& b) {
    return a.dim_ == b.dim_ && a.data_ == b.data_;
  }

  std::vector<std::vector<Rational>> rows() const {
    std::vector<std::vector<Rational>> out(dim_, std::vector<Rational>(dim_));
    for (std::size_t i = 0; i < dim_; ++i) {
      for (std::size_t j = 0; j < dim_; ++j) out[i][j] = (*this)(i, j);
    }
    return out;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<Rational> data_;
};

/// Block-diagonal sum, blocks in the given order.
inline SymmetricMatrix direct_sum(std::span<const SymmetricMatrix> blocks) {
  std::size_t total = 0;
  for (const auto& b : blocks) total += b.dim();
  SymmetricMatrix out(total);
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.dim(); ++i) {
      for (std::size_t j = i; j < b.dim(); ++j) out.set(offset + i, offset + j, b(i, j));
    }
    offset += b.dim();
  }
  return out;
}

}  // namespace posbraid
