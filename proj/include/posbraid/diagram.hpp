#pragma once

#include <cstddef>
#include <map>
#include <numeric>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "posbraid/braid.hpp"
#include "posbraid/errors.hpp"

namespace posbraid {

enum class Color { black, white };

inline Color opposite(Color c) { return c == Color::black ? Color::white : Color::black; }
inline const char* to_string(Color c) { return c == Color::black ? "black" : "white"; }

enum class FaceKind { above_crossing, axis, unbounded };

inline const char* to_string(FaceKind k) {
  switch (k) {
    case FaceKind::above_crossing: return "above_crossing";
    case FaceKind::axis: return "F";
    case FaceKind::unbounded: return "F'";
  }
  return "?";
}

/// A region of the standard closure diagram. Above-crossing faces are
/// identified with the word position of the crossing they start above and
/// span up to the next crossing of the same column, cyclically.
struct Face {
  FaceKind kind = FaceKind::above_crossing;
  int column = 0;  ///< 1..n for above-crossing faces, 0 for F, n+1 for F'
  int start = -1;  ///< word position of the crossing below the face
  int end = -1;    ///< word position of the crossing above the face
  int sides = 0;
  Color color = Color::black;
};

/// The four regions around one crossing.
struct CrossingRegions {
  int column = 0;
  int above = 0;
  int below = 0;
  int left = 0;
  int right = 0;
};

/// Columns, faces and crossing incidences of the closure of a positive
/// braid. Faces 0..cr-1 sit above the crossing at that position, face cr is
/// the axis face F (left of column 1) and face cr+1 the unbounded face F'
/// (right of column n). Faces above odd-index crossings are black.
class StandardDiagram {
 public:
  explicit StandardDiagram(BraidWord word) : word_(std::move(word)) {
    const int n = word_.generators();
    const int cr = word_.crossings();
    if (n < 1) throw InputError("diagram needs at least one generator");
    columns_.assign(static_cast<std::size_t>(n), {});
    for (int p = 0; p < cr; ++p) columns_[static_cast<std::size_t>(word_[static_cast<std::size_t>(p)] - 1)].push_back(p);
    for (int i = 1; i <= n; ++i) {
      if (column(i).empty()) throw InputError("split braid word: generator " + std::to_string(i) + " unused");
    }

    // previous[i][p]: last position of s_i strictly before p, cyclically
    auto previous_in = [&](int i, int p) {
      const auto& c = column(i);
      int best = c.back();
      for (int q : c) {
        if (q < p) best = q;
        else break;
      }
      return best;
    };
    auto next_in = [&](int i, int p) {
      const auto& c = column(i);
      for (int q : c) {
        if (q > p) return q;
      }
      return c.front();
    };

    faces_.resize(static_cast<std::size_t>(cr) + 2);
    for (int p = 0; p < cr; ++p) {
      const int i = word_[static_cast<std::size_t>(p)];
      Face f;
      f.kind = FaceKind::above_crossing;
      f.column = i;
      f.start = p;
      f.end = next_in(i, p);
      f.sides = 2;
      for (int q = (p + 1) % cr; q != f.end; q = (q + 1) % cr) {
        const int l = word_[static_cast<std::size_t>(q)];
        if (l == i - 1 || l == i + 1) ++f.sides;
      }
      f.color = (i % 2 == 1) ? Color::black : Color::white;
      faces_[static_cast<std::size_t>(p)] = f;
    }
    Face axis;
    axis.kind = FaceKind::axis;
    axis.column = 0;
    axis.sides = static_cast<int>(column(1).size());
    axis.color = Color::white;
    faces_[static_cast<std::size_t>(cr)] = axis;
    Face outer;
    outer.kind = FaceKind::unbounded;
    outer.column = n + 1;
    outer.sides = static_cast<int>(column(n).size());
    outer.color = (n % 2 == 1) ? Color::white : Color::black;
    faces_[static_cast<std::size_t>(cr) + 1] = outer;

    regions_.resize(static_cast<std::size_t>(cr));
    for (int p = 0; p < cr; ++p) {
      const int i = word_[static_cast<std::size_t>(p)];
      CrossingRegions r;
      r.column = i;
      r.above = p;
      r.below = previous_in(i, p);
      r.left = (i == 1) ? axis_face() : previous_in(i - 1, p);
      r.right = (i == n) ? unbounded_face() : previous_in(i + 1, p);
      regions_[static_cast<std::size_t>(p)] = r;
    }
  }

  const BraidWord& word() const { return word_; }
  int generators() const { return word_.generators(); }
  int crossings() const { return word_.crossings(); }

  /// Word positions of the s_i crossings, bottom to top.
  const std::vector<int>& column(int i) const { return columns_[static_cast<std::size_t>(i - 1)]; }

  std::size_t face_count() const { return faces_.size(); }
  const Face& face(int id) const { return faces_[static_cast<std::size_t>(id)]; }
  const std::vector<Face>& faces() const { return faces_; }
  int axis_face() const { return crossings(); }
  int unbounded_face() const { return crossings() + 1; }

  const CrossingRegions& regions_at(int position) const { return regions_[static_cast<std::size_t>(position)]; }
  const std::vector<CrossingRegions>& crossing_regions() const { return regions_; }

  /// Faces of column i in cyclic order starting from the lowest position.
  const std::vector<int>& column_faces(int i) const { return column(i); }

  /// The two regions of color `c` meeting at a crossing: above/below when the
  /// crossing's column has color c, left/right otherwise.
  std::pair<int, int> colored_pair(int position, Color c) const {
    const auto& r = regions_at(position);
    if (column_color(r.column) == c) return {r.above, r.below};
    return {r.left, r.right};
  }

  static Color column_color(int i) { return (i % 2 == 1) ? Color::black : Color::white; }

  std::vector<int> faces_of_color(Color c) const {
    std::vector<int> ids;
    for (std::size_t f = 0; f < faces_.size(); ++f) {
      if (faces_[f].color == c) ids.push_back(static_cast<int>(f));
    }
    return ids;
  }

 private:
  BraidWord word_;
  std::vector<std::vector<int>> columns_;
  std::vector<Face> faces_;
  std::vector<CrossingRegions> regions_;
};

/// Pre: every generator used at least once (torus2k or generic words; the
/// constructor also accepts connected sums).
inline StandardDiagram build_diagram(const BraidWord& w) { return StandardDiagram(w); }

struct FaceCensus {
  std::map<int, int> by_sides;  ///< sides -> number of above-crossing faces
  int s = 0;                    ///< sides of F
  int s_prime = 0;              ///< sides of F'
  int cr = 0;

  int f(int sides) const {
    auto it = by_sides.find(sides);
    return it == by_sides.end() ? 0 : it->second;
  }
  /// 2 f2 + f3 - s - s' - sum_{i>=5} (i-4) f_i; zero on every diagram.
  long constraint_residual() const {
    long r = 2L * f(2) + f(3) - s - s_prime;
    for (auto [i, c] : by_sides) {
      if (i >= 5) r -= static_cast<long>(i - 4) * c;
    }
    return r;
  }
};

/// Counts faces by side number and checks the three counting identities.
inline FaceCensus face_census(const StandardDiagram& d) {
  FaceCensus c;
  c.cr = d.crossings();
  for (int p = 0; p < c.cr; ++p) ++c.by_sides[d.face(p).sides];
  c.s = d.face(d.axis_face()).sides;
  c.s_prime = d.face(d.unbounded_face()).sides;
  long faces = 0, weighted = 0;
  for (auto [i, k] : c.by_sides) {
    faces += k;
    weighted += static_cast<long>(i) * k;
  }
  if (faces != c.cr) throw ConsistencyError("face census: sum f_i != cr");
  if (weighted + c.s + c.s_prime != 4L * c.cr) throw ConsistencyError("face census: sum i f_i + s + s' != 4 cr");
  if (c.constraint_residual() != 0) throw ConsistencyError("face census: 2f2 + f3 constraint violated");
  return c;
}

struct ChessboardSurfaces {
  std::vector<int> black_faces;
  std::vector<int> white_faces;
  int h1_black = 0;
  int h1_white = 0;
  bool black_connected = true;
  bool white_connected = true;
};

namespace detail {

/// Cycle rank E - V + C of the graph on faces of one color whose edges are
/// the crossings (each crossing joins two faces of either color).
inline std::pair<int, bool> cycle_rank(const StandardDiagram& d, Color c) {
  const auto ids = d.faces_of_color(c);
  std::vector<int> parent(d.face_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  int components = static_cast<int>(ids.size());
  for (int p = 0; p < d.crossings(); ++p) {
    auto [a, b] = d.colored_pair(p, c);
    const int ra = find(a), rb = find(b);
    if (ra != rb) {
      parent[static_cast<std::size_t>(ra)] = rb;
      --components;
    }
  }
  const int rank = d.crossings() - static_cast<int>(ids.size()) + components;
  return {rank, components == 1};
}

}  // namespace detail

/// Face sets and first Betti numbers of both chessboard surfaces. When both
/// face graphs are connected, h1_black + h1_white = cr is checked.
inline ChessboardSurfaces chessboard(const StandardDiagram& d) {
  ChessboardSurfaces s;
  s.black_faces = d.faces_of_color(Color::black);
  s.white_faces = d.faces_of_color(Color::white);
  std::tie(s.h1_black, s.black_connected) = detail::cycle_rank(d, Color::black);
  std::tie(s.h1_white, s.white_connected) = detail::cycle_rank(d, Color::white);
  if (s.black_connected && s.white_connected && s.h1_black + s.h1_white != d.crossings()) {
    throw ConsistencyError("chessboard: h1(S_B) + h1(S_W) != cr");
  }
  return s;
}

/// True iff every column except possibly the first has an above-crossing
/// face with at least four sides.
inline bool lemma41_holds(const StandardDiagram& d) {
  for (int i = 2; i <= d.generators(); ++i) {
    bool found = false;
    for (int p : d.column(i)) found = found || d.face(p).sides >= 4;
    if (!found) return false;
  }
  return true;
}

}  // namespace posbraid
