#pragma once

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "posbraid/diagram.hpp"
#include "posbraid/errors.hpp"
#include "posbraid/matrix.hpp"
#include "posbraid/signature.hpp"

namespace posbraid {

/// Pairing of the curves around all faces of one color, on the chessboard
/// surface of the other color. Each crossing joins two faces of the basis
/// color; a same-column (above/below) contact contributes -1 off the
/// diagonal, a left/right contact +1, and diagonals are minus the row sums
/// of the off-diagonal contributions. Self-contacts contribute nothing.
///
/// Linking numbers here count one-half of the negative crossings minus
/// one-half of the positive ones, so a positive diagram gives the positive
/// signature convention; this is the usual Goeritz recipe with all signs
/// flipped.
class FacePairing {
 public:
  FacePairing(const StandardDiagram& d, Color basis_color) : basis_color_(basis_color) {
    faces_ = d.faces_of_color(basis_color);
    slot_.assign(d.face_count(), -1);
    for (std::size_t k = 0; k < faces_.size(); ++k) slot_[static_cast<std::size_t>(faces_[k])] = static_cast<int>(k);
    const std::size_t m = faces_.size();
    entries_.assign(m * m, 0);
    for (int p = 0; p < d.crossings(); ++p) {
      auto [a, b] = d.colored_pair(p, basis_color);
      if (a == b) continue;
      const long c = StandardDiagram::column_color(d.regions_at(p).column) == basis_color ? -1 : 1;
      const auto u = static_cast<std::size_t>(slot_[static_cast<std::size_t>(a)]);
      const auto v = static_cast<std::size_t>(slot_[static_cast<std::size_t>(b)]);
      entries_[u * m + v] += c;
      entries_[v * m + u] += c;
      entries_[u * m + u] -= c;
      entries_[v * m + v] -= c;
    }
  }

  Color basis_color() const { return basis_color_; }
  const std::vector<int>& faces() const { return faces_; }
  bool contains(int face) const { return slot_[static_cast<std::size_t>(face)] >= 0; }

  long operator()(int face_a, int face_b) const {
    const auto m = faces_.size();
    return entries_[static_cast<std::size_t>(slot_[static_cast<std::size_t>(face_a)]) * m +
                    static_cast<std::size_t>(slot_[static_cast<std::size_t>(face_b)])];
  }

  /// Gram matrix of the curves around `faces`, the k-th curve reversed when
  /// signs[k] = -1. Empty `signs` means all counterclockwise.
  SymmetricMatrix restrict_to(std::span<const int> faces, std::span<const int> signs = {}) const {
    SymmetricMatrix g(faces.size());
    for (std::size_t a = 0; a < faces.size(); ++a) {
      for (std::size_t b = a; b < faces.size(); ++b) {
        long v = (*this)(faces[a], faces[b]);
        if (!signs.empty()) v *= signs[a] * signs[b];
        if (v != 0) g.set(a, b, Rational(v));
      }
    }
    return g;
  }

 private:
  Color basis_color_;
  std::vector<int> faces_;
  std::vector<int> slot_;
  std::vector<long> entries_;
};

struct GoeritzForm {
  Color surface = Color::black;      ///< the chessboard surface S_B or S_W
  Color basis_color = Color::white;  ///< faces whose boundary curves span H_1
  std::vector<int> basis;            ///< face ids, in matrix order
  std::vector<int> orientation;      ///< +1 counterclockwise, -1 reversed
  int excluded = -1;
  SymmetricMatrix matrix;
};

namespace detail {

inline int default_excluded_face(const StandardDiagram& d, Color basis_color) {
  if (d.face(d.unbounded_face()).color == basis_color) return d.unbounded_face();
  int best = -1;
  for (int f : d.faces_of_color(basis_color)) {
    if (best < 0 || d.face(f).sides > d.face(best).sides) best = f;
  }
  return best;
}

}  // namespace detail

/// Goeritz form of the chessboard surface of color `surface`, on the curves
/// around all opposite-color faces but `excluded` (default: F' when it has
/// the basis color, else a face with the most sides).
inline GoeritzForm goeritz_matrix(const StandardDiagram& d, Color surface, std::optional<int> excluded = std::nullopt) {
  GoeritzForm g;
  g.surface = surface;
  g.basis_color = opposite(surface);
  if (!detail::cycle_rank(d, g.basis_color).second) {
    throw InputError(std::string("goeritz: ") + to_string(g.basis_color) + " region graph is disconnected");
  }
  const FacePairing pairing(d, g.basis_color);
  g.excluded = excluded.value_or(detail::default_excluded_face(d, g.basis_color));
  if (g.excluded < 0 || !pairing.contains(g.excluded)) throw InputError("goeritz: excluded face has the wrong color");
  for (int f : pairing.faces()) {
    if (f != g.excluded) g.basis.push_back(f);
  }
  g.orientation.assign(g.basis.size(), 1);
  g.matrix = pairing.restrict_to(g.basis);
  return g;
}

struct GordonLitherland {
  long sigma_black = 0;  ///< sigma(G_B)
  long sigma_white = 0;  ///< sigma(G_W)
  std::size_t dim_black = 0;
  std::size_t dim_white = 0;
  int cr = 0;
  long sigma = 0;  ///< (sigma(G_B) + sigma(G_W) + cr) / 2
};

/// 2 sigma(L) = sigma(G_B) + sigma(G_W) + cr(D) for the positive diagram.
inline GordonLitherland gordon_litherland(const StandardDiagram& d) {
  GordonLitherland r;
  const auto gb = goeritz_matrix(d, Color::black);
  const auto gw = goeritz_matrix(d, Color::white);
  r.sigma_black = signature(gb.matrix).signature();
  r.sigma_white = signature(gw.matrix).signature();
  r.dim_black = gb.matrix.dim();
  r.dim_white = gw.matrix.dim();
  r.cr = d.crossings();
  const long total = r.sigma_black + r.sigma_white + r.cr;
  if (total % 2 != 0) throw ConsistencyError("Gordon-Litherland sum is odd");
  r.sigma = total / 2;
  return r;
}

inline long gl_signature(const StandardDiagram& d) { return gordon_litherland(d).sigma; }

struct AuditViolation {
  int face_a = 0;
  int face_b = 0;
  long expected = 0;
  long actual = 0;
  std::string rule;
};

/// Compares every Goeritz entry between above-crossing faces against the
/// local rules: 4 - m on the diagonal for an m-sided face, -1 for one shared
/// same-column crossing, +1 for one shared crossing two columns apart, 0 for
/// no shared crossing. Pairs sharing two or more crossings are skipped.
/// Pre: every generator occurs at least twice.
inline std::vector<AuditViolation> lemma22_audit(const StandardDiagram& d) {
  for (int i = 1; i <= d.generators(); ++i) {
    if (d.column(i).size() < 2) throw InputError("lemma22_audit: every generator must occur at least twice");
  }
  std::vector<AuditViolation> out;
  for (Color c : {Color::black, Color::white}) {
    const FacePairing pairing(d, c);
    std::map<std::pair<int, int>, int> contacts;
    for (int p = 0; p < d.crossings(); ++p) {
      auto [a, b] = d.colored_pair(p, c);
      if (a != b) ++contacts[{std::min(a, b), std::max(a, b)}];
    }
    std::vector<int> faces;
    for (int f : pairing.faces()) {
      if (d.face(f).kind == FaceKind::above_crossing) faces.push_back(f);
    }
    for (std::size_t x = 0; x < faces.size(); ++x) {
      const int a = faces[x];
      const long diag = 4 - d.face(a).sides;
      if (pairing(a, a) != diag) out.push_back({a, a, diag, pairing(a, a), "diagonal 4 - sides"});
      for (std::size_t y = x + 1; y < faces.size(); ++y) {
        const int b = faces[y];
        auto it = contacts.find({std::min(a, b), std::max(a, b)});
        const int shared = it == contacts.end() ? 0 : it->second;
        if (shared >= 2) continue;
        long expected = 0;
        std::string rule = "no common crossing";
        if (shared == 1) {
          const int gap = std::abs(d.face(a).column - d.face(b).column);
          if (gap == 0) {
            expected = -1;
            rule = "same column, one crossing";
          } else if (gap == 2) {
            expected = 1;
            rule = "columns two apart, one crossing";
          } else {
            out.push_back({a, b, 0, pairing(a, b), "unexpected column gap"});
            continue;
          }
        }
        if (pairing(a, b) != expected) out.push_back({a, b, expected, pairing(a, b), rule});
      }
    }
  }
  return out;
}

}  // namespace posbraid
