#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "posbraid/braid.hpp"
#include "posbraid/diagram.hpp"
#include "posbraid/errors.hpp"
#include "posbraid/goeritz.hpp"
#include "posbraid/matrix.hpp"
#include "posbraid/polynomial.hpp"
#include "posbraid/rational.hpp"
#include "posbraid/seifert.hpp"
#include "posbraid/sigcore.hpp"
#include "posbraid/signature.hpp"

namespace posbraid {

// ---------------------------------------------------------------------------
// Subspace bases B_0..B_3

enum class SelectionReason { all_but_max, two_sided, alternating_three_sided };

inline const char* to_string(SelectionReason r) {
  switch (r) {
    case SelectionReason::all_but_max: return "all_but_max";
    case SelectionReason::two_sided: return "two_sided";
    case SelectionReason::alternating_three_sided: return "alternating_three_sided";
  }
  return "?";
}

struct BasisElement {
  int face = 0;
  int column = 0;
  int orientation = 1;
  SelectionReason reason = SelectionReason::all_but_max;
};

/// B_j: for columns i = j (mod 4) every face but one with the most sides
/// ("core" faces); for columns i = j+2 (mod 4) every 2-sided face and every
/// other 3-sided face. Even j live on the black surface (white faces), odd j
/// on the white surface (black faces).
struct SubspaceBasis {
  int j = 0;
  Color basis_color = Color::white;
  std::vector<BasisElement> elements;
  std::map<int, int> omitted;  ///< core column -> omitted face
  /// Column-1 selections that took one of the special branches (a 3-sided
  /// omitted maximum, or rounding down the alternating 3-sided faces).
  std::vector<std::string> column1_notes;

  std::size_t dim() const { return elements.size(); }
  std::vector<int> faces() const {
    std::vector<int> f;
    for (const auto& e : elements) f.push_back(e.face);
    return f;
  }
  std::vector<int> orientations() const {
    std::vector<int> s;
    for (const auto& e : elements) s.push_back(e.orientation);
    return s;
  }
};

namespace detail {

inline int mod4(int x) { return ((x % 4) + 4) % 4; }

/// Core faces of column i: all but the first face with the most sides,
/// listed upward starting just above the omitted one.
inline std::pair<int, std::vector<int>> core_faces(const StandardDiagram& d, int column) {
  const auto& faces = d.column_faces(column);
  std::size_t omit = 0;
  for (std::size_t k = 1; k < faces.size(); ++k) {
    if (d.face(faces[k]).sides > d.face(faces[omit]).sides) omit = k;
  }
  std::vector<int> core;
  for (std::size_t k = 1; k < faces.size(); ++k) core.push_back(faces[(omit + k) % faces.size()]);
  return {faces[omit], core};
}

struct BlockSelection {
  std::vector<std::pair<int, SelectionReason>> faces;  // in column order
  bool rounded_down = false;
};

/// 2-sided faces plus every other 3-sided face, scanning upward from the
/// lowest face with at least four sides and taking the first 3-sided face
/// met. Without such a face the scan starts at the lowest face and an odd
/// count of 3-sided faces is rounded down.
inline BlockSelection block_faces(const StandardDiagram& d, int column) {
  const auto& faces = d.column_faces(column);
  const std::size_t m = faces.size();
  std::optional<std::size_t> anchor;
  for (std::size_t k = 0; k < m && !anchor; ++k) {
    if (d.face(faces[k]).sides >= 4) anchor = k;
  }
  std::set<int> picked3;
  const std::size_t first = anchor ? *anchor + 1 : 0;
  std::vector<int> threes;
  for (std::size_t k = 0; k < m; ++k) {
    const int f = faces[(first + k) % m];
    if (d.face(f).sides == 3) threes.push_back(f);
  }
  BlockSelection sel;
  for (std::size_t k = 0; k < threes.size(); k += 2) picked3.insert(threes[k]);
  if (!anchor && threes.size() % 2 == 1) {
    picked3.erase(threes.back());
    sel.rounded_down = true;
  }
  for (int f : faces) {
    if (d.face(f).sides == 2) sel.faces.emplace_back(f, SelectionReason::two_sided);
    if (picked3.count(f)) sel.faces.emplace_back(f, SelectionReason::alternating_three_sided);
  }
  return sel;
}

/// Orients curves so that every edge of a spanning forest of the Gram graph
/// gets a positive entry (alternating along columns, block chains matched to
/// their attaching entry).
inline void orient(const FacePairing& pairing, SubspaceBasis& basis) {
  const std::size_t m = basis.elements.size();
  std::vector<int> sign(m, 0);
  for (std::size_t root = 0; root < m; ++root) {
    if (sign[root] != 0) continue;
    sign[root] = 1;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t v = 0; v < m; ++v) {
        if (v == u || sign[v] != 0) continue;
        const long e = pairing(basis.elements[u].face, basis.elements[v].face);
        if (e == 0) continue;
        sign[v] = (e > 0 ? 1 : -1) * sign[u];
        queue.push_back(v);
      }
    }
  }
  for (std::size_t k = 0; k < m; ++k) basis.elements[k].orientation = sign[k];
}

}  // namespace detail

/// Builds B_0..B_3. Pre: every column has at least two faces.
inline std::array<SubspaceBasis, 4> select_bases(const StandardDiagram& d) {
  const int n = d.generators();
  for (int i = 1; i <= n; ++i) {
    if (d.column(i).size() < 2) throw InputError("select_bases: every generator must occur at least twice");
  }
  std::array<SubspaceBasis, 4> out;
  const FacePairing white(d, Color::white);
  const FacePairing black(d, Color::black);
  for (int j = 0; j < 4; ++j) {
    SubspaceBasis& b = out[static_cast<std::size_t>(j)];
    b.j = j;
    b.basis_color = (j % 2 == 0) ? Color::white : Color::black;
    for (int i = 1; i <= n; ++i) {
      if (detail::mod4(i) == j) {
        auto [omitted, core] = detail::core_faces(d, i);
        b.omitted[i] = omitted;
        for (int f : core) b.elements.push_back({f, i, 1, SelectionReason::all_but_max});
        if (i == 1 && d.face(omitted).sides <= 3) {
          b.column1_notes.push_back("column 1 core omits a face with " + std::to_string(d.face(omitted).sides) +
                                    " sides");
        }
      }
    }
    for (int i = 1; i <= n; ++i) {
      if (detail::mod4(i - 2) == j) {
        auto sel = detail::block_faces(d, i);
        for (auto [f, why] : sel.faces) b.elements.push_back({f, i, 1, why});
        if (sel.rounded_down) {
          b.column1_notes.push_back("column " + std::to_string(i) +
                                    ": odd number of 3-sided faces and no face with more than three sides, rounded down");
        }
      }
    }
    detail::orient(j % 2 == 0 ? white : black, b);
  }
  return out;
}

/// Gram matrix of B_j under the relevant Goeritz form, orientations applied.
inline SymmetricMatrix gram(const StandardDiagram& d, const SubspaceBasis& basis) {
  const FacePairing pairing(d, basis.basis_color);
  const auto faces = basis.faces();
  const auto signs = basis.orientations();
  return pairing.restrict_to(faces, signs);
}

// ---------------------------------------------------------------------------
// Structural certificate for G_j

enum class BlockKind { power_of_two, two_one_two, trisum };

inline const char* to_string(BlockKind k) {
  switch (k) {
    case BlockKind::power_of_two: return "T(2^a)";
    case BlockKind::two_one_two: return "T(2^a,1,2^b)";
    case BlockKind::trisum: return "trisum";
  }
  return "?";
}

struct CertifiedBlock {
  BlockKind kind = BlockKind::power_of_two;
  std::vector<std::size_t> indices;  ///< basis indices, in block order
  TrisumSpec spec;                   ///< trisum: full spec; otherwise core empty, one block or a pure T(2^a)
  int a = 0;                         ///< T(2^a) / T(2^a,1,2^b)
  int b = 0;
  int core_column = 0;               ///< trisum only
  long signature = 0;
};

struct DecompositionProof {
  bool certified = false;
  std::string failure;
  std::vector<std::size_t> permutation;  ///< concatenated block indices
  std::vector<CertifiedBlock> blocks;
};

namespace detail {

inline std::vector<std::vector<std::size_t>> components(const SymmetricMatrix& g, const std::vector<bool>& keep) {
  const std::size_t m = g.dim();
  std::vector<int> comp(m, -1);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < m; ++s) {
    if (!keep[s] || comp[s] >= 0) continue;
    out.emplace_back();
    std::deque<std::size_t> q{s};
    comp[s] = static_cast<int>(out.size() - 1);
    while (!q.empty()) {
      const std::size_t u = q.front();
      q.pop_front();
      out.back().push_back(u);
      for (std::size_t v = 0; v < m; ++v) {
        if (keep[v] && comp[v] < 0 && v != u && g(u, v) != 0) {
          comp[v] = comp[s];
          q.push_back(v);
        }
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

/// Orders the nodes of a path graph from the endpoint with the lowest index.
inline std::optional<std::vector<std::size_t>> path_order(const SymmetricMatrix& g, const std::vector<std::size_t>& nodes) {
  if (nodes.size() == 1) return nodes;
  std::map<std::size_t, std::vector<std::size_t>> adj;
  std::size_t edges = 0;
  for (std::size_t x = 0; x < nodes.size(); ++x) {
    for (std::size_t y = x + 1; y < nodes.size(); ++y) {
      if (g(nodes[x], nodes[y]) != 0) {
        adj[nodes[x]].push_back(nodes[y]);
        adj[nodes[y]].push_back(nodes[x]);
        ++edges;
      }
    }
  }
  if (edges + 1 != nodes.size()) return std::nullopt;
  std::optional<std::size_t> start;
  for (std::size_t u : nodes) {
    if (adj[u].size() > 2) return std::nullopt;
    if (adj[u].size() == 1 && !start) start = u;
  }
  if (!start) return std::nullopt;
  std::vector<std::size_t> order{*start};
  std::size_t prev = *start, cur = adj[*start].front();
  while (true) {
    order.push_back(cur);
    if (adj[cur].size() == 1) break;
    const std::size_t next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
    prev = cur;
    cur = next;
  }
  if (order.size() != nodes.size()) return std::nullopt;
  return order;
}

/// Reads a path as T(2^a) or T(2^a,1,2^b); nullopt if it is neither.
inline std::optional<std::pair<int, int>> two_one_two_shape(const SymmetricMatrix& g, const std::vector<std::size_t>& path,
                                                            bool& has_one) {
  int ones = 0;
  int at = -1;
  for (std::size_t k = 0; k < path.size(); ++k) {
    const Rational& v = g(path[k], path[k]);
    if (v == 1) {
      ++ones;
      at = static_cast<int>(k);
    } else if (v != 2) {
      return std::nullopt;
    }
    if (k + 1 < path.size() && g(path[k], path[k + 1]) != 1) return std::nullopt;
  }
  if (ones > 1) return std::nullopt;
  has_one = ones == 1;
  if (!has_one) return std::pair<int, int>{static_cast<int>(path.size()), 0};
  return std::pair<int, int>{at, static_cast<int>(path.size()) - 1 - at};
}

}  // namespace detail

/// Exhibits G_j as a direct sum of T(2^a), T(2^a,1,2^b) and trisum matrices
/// whose cores are the core faces of one column. Every block is checked
/// entry by entry against its realization; the first mismatch is reported.
inline DecompositionProof decompose_structure(const SymmetricMatrix& g, const SubspaceBasis& basis) {
  DecompositionProof proof;
  const std::size_t m = g.dim();
  if (m != basis.dim()) {
    proof.failure = "Gram matrix and basis sizes differ";
    return proof;
  }
  auto fail = [&](std::string why) {
    proof.failure = std::move(why);
    proof.certified = false;
    return proof;
  };
  for (std::size_t u = 0; u < m; ++u) {
    for (std::size_t v = u + 1; v < m; ++v) {
      if (g(u, v) < 0) return fail("negative off-diagonal entry at (" + std::to_string(u) + ", " + std::to_string(v) + ")");
    }
  }
  const auto comps = detail::components(g, std::vector<bool>(m, true));
  for (const auto& comp : comps) {
    std::vector<std::size_t> core, rest;
    std::set<int> core_columns;
    for (std::size_t u : comp) {
      if (basis.elements[u].reason == SelectionReason::all_but_max) {
        core.push_back(u);
        core_columns.insert(basis.elements[u].column);
      } else {
        rest.push_back(u);
      }
    }
    CertifiedBlock block;
    if (core.empty()) {
      auto path = detail::path_order(g, comp);
      if (!path) return fail("component at basis index " + std::to_string(comp.front()) + " is not a path");
      bool has_one = false;
      auto shape = detail::two_one_two_shape(g, *path, has_one);
      if (!shape) return fail("path at basis index " + std::to_string(comp.front()) + " is not T(2^a) or T(2^a,1,2^b)");
      block.kind = has_one ? BlockKind::two_one_two : BlockKind::power_of_two;
      block.a = shape->first;
      block.b = shape->second;
      block.indices = *path;
      const auto expected = has_one ? tridiagonal(block_diagonal(block.a, block.b))
                                    : tridiagonal(std::vector<long>(static_cast<std::size_t>(block.a), 2));
      if (!(g.principal(block.indices) == expected)) return fail("standalone block does not match its realization");
      block.signature = signature(expected).signature();
    } else {
      if (core_columns.size() != 1) return fail("component mixes core faces of several columns");
      block.kind = BlockKind::trisum;
      block.core_column = *core_columns.begin();
      // core faces are stored in path order
      for (std::size_t k = 0; k + 1 < core.size(); ++k) {
        if (g(core[k], core[k + 1]) != 1) return fail("core of column " + std::to_string(block.core_column) + " is not a path with unit couplings");
      }
      for (std::size_t x = 0; x < core.size(); ++x) {
        for (std::size_t y = x + 2; y < core.size(); ++y) {
          if (g(core[x], core[y]) != 0) return fail("core of column " + std::to_string(block.core_column) + " is not tridiagonal");
        }
      }
      for (std::size_t u : core) {
        const Rational& v = g(u, u);
        if (v.get_den() != 1) return fail("non-integral core diagonal");
        block.spec.core.push_back(v.get_num().get_si());
      }
      block.indices = core;
      std::vector<bool> keep(m, false);
      for (std::size_t u : rest) keep[u] = true;
      for (const auto& sub : detail::components(g, keep)) {
        auto path = detail::path_order(g, sub);
        if (!path) return fail("trisum block at basis index " + std::to_string(sub.front()) + " is not a path");
        bool has_one = false;
        auto shape = detail::two_one_two_shape(g, *path, has_one);
        if (!shape || !has_one) return fail("trisum block at basis index " + std::to_string(sub.front()) + " is not T(2^a,1,2^b)");
        const std::size_t one = (*path)[static_cast<std::size_t>(shape->first)];
        std::optional<std::size_t> attach;
        for (std::size_t u : *path) {
          for (std::size_t k = 0; k < core.size(); ++k) {
            if (g(u, core[k]) == 0) continue;
            if (u != one || attach || g(u, core[k]) != 1) {
              return fail("trisum block at basis index " + std::to_string(sub.front()) + " is not attached by a single unit entry at its 1");
            }
            attach = k;
          }
        }
        if (!attach) return fail("trisum block is disconnected from its core");
        if (block.spec.core[*attach] > 0) return fail("trisum block attached to a positive core entry");
        block.spec.blocks.push_back({shape->first, shape->second, *attach});
        block.indices.insert(block.indices.end(), path->begin(), path->end());
      }
      if (!(g.principal(block.indices) == realize_trisum(block.spec))) return fail("trisum does not match its realization");
      block.signature = signature(realize_trisum(block.spec)).signature();
    }
    proof.permutation.insert(proof.permutation.end(), block.indices.begin(), block.indices.end());
    proof.blocks.push_back(std::move(block));
  }
  proof.certified = true;
  return proof;
}

// ---------------------------------------------------------------------------
// Lemma checks

struct DimensionCheck {
  long total_dim = 0;
  Rational bound;  ///< f2 + (f3 - 1)/2 + cr - n
  Rational slack;
};

inline DimensionCheck check_lemma43(const std::array<SubspaceBasis, 4>& bases, const FaceCensus& census, int n) {
  DimensionCheck c;
  for (const auto& b : bases) c.total_dim += static_cast<long>(b.dim());
  c.bound = Rational(census.f(2)) + half(census.f(3) - 1) + Rational(census.cr - n);
  c.slack = Rational(c.total_dim) - c.bound;
  return c;
}

/// One link of the chain that bounds the sum of the sigma(G_j).
struct ChainLink {
  std::string name;
  Rational lhs;
  Rational rhs;
  bool equality = false;  ///< lhs == rhs required, otherwise lhs >= rhs
  bool holds() const { return equality ? lhs == rhs : lhs >= rhs; }
  Rational slack() const { return lhs - rhs; }
};

struct SignatureSumCheck {
  long sigma_sum = 0;       ///< sum_j sigma(G_j)
  Rational bound;           ///< -(f2 + f3)/2 + 2
  Rational slack;
  int p = 0;                ///< columns with lower_trace(M_i) < 0
  int q = 0;                ///< columns with lower_trace(M_i) = b(M_i) = 0
  int f3_used = 0;          ///< 3-sided faces in the bases
  long trisum_sigma = 0;    ///< sum_i sigma(M_i)
  long trisum_lower_trace = 0;
  long trisum_block_dim = 0;
  long t_dim = 0;           ///< dim(T)
  long t_sigma = 0;         ///< sigma(T)
  std::vector<ChainLink> links;
  bool all_links_hold() const {
    return std::all_of(links.begin(), links.end(), [](const ChainLink& l) { return l.holds(); });
  }
};

/// Sum of the sigma(G_j) against -(f2 + f3)/2 + 2, re-deriving each step:
/// the direct-sum split into trisums M_i and the rest T, sigma(T) >= dim(T)/2,
/// sum b(M_i) + dim(T) = f2 + f3', the trace bounds, the per-column bound on
/// sigma(M_i), and p + q - n + f3' >= 0.
inline SignatureSumCheck check_lemma44(const std::array<SymmetricMatrix, 4>& grams,
                                       const std::array<SubspaceBasis, 4>& bases,
                                       const std::array<DecompositionProof, 4>& proofs,
                                       const FaceCensus& census, int n) {
  SignatureSumCheck c;
  std::map<int, const CertifiedBlock*> trisum_by_column;
  for (std::size_t j = 0; j < 4; ++j) {
    c.sigma_sum += signature(grams[j]).signature();
    for (const auto& e : bases[j].elements) {
      if (e.reason == SelectionReason::alternating_three_sided) ++c.f3_used;
    }
    for (const auto& b : proofs[j].blocks) {
      if (b.kind == BlockKind::trisum) {
        trisum_by_column[b.core_column] = &b;
      } else {
        c.t_dim += static_cast<long>(b.indices.size());
        c.t_sigma += b.signature;
      }
    }
  }
  long per_column_bound_twice = 0;  // 2 * sum of the per-column lower bounds
  long columns_meeting_bound = 0;
  for (int i = 1; i <= n; ++i) {
    auto it = trisum_by_column.find(i);
    if (it == trisum_by_column.end()) {
      throw ConsistencyError("check_lemma44: column " + std::to_string(i) + " has no certified trisum");
    }
    const CertifiedBlock& t = *it->second;
    const long tr = t.spec.core_lower_trace();
    const long b = t.spec.block_dim();
    c.trisum_sigma += t.signature;
    c.trisum_lower_trace += tr;
    c.trisum_block_dim += b;
    if (tr < 0) ++c.p;
    const long twice_bound = (tr == 0 && b == 0) ? 0 : -1 + tr + b;
    if (tr == 0 && b == 0) ++c.q;
    per_column_bound_twice += twice_bound;
    if (2 * t.signature >= twice_bound) ++columns_meeting_bound;
  }
  long high_faces = 0;  // sum_{i>=5} (4 - i) f_i
  for (auto [sides, count] : census.by_sides) {
    if (sides >= 5) high_faces += static_cast<long>(4 - sides) * count;
  }
  const long f2 = census.f(2), f3 = census.f(3);
  c.bound = half(-(f2 + f3) + 4);
  c.slack = Rational(c.sigma_sum) - c.bound;

  c.links.push_back({"sum sigma(G_j) = sum sigma(M_i) + sigma(T)", Rational(c.sigma_sum),
                     Rational(c.trisum_sigma + c.t_sigma), true});
  c.links.push_back({"sigma(T) >= dim(T)/2", Rational(c.t_sigma), half(c.t_dim), false});
  c.links.push_back({"sum b(M_i) + dim(T) = f2 + f3'", Rational(c.trisum_block_dim + c.t_dim),
                     Rational(f2 + c.f3_used), true});
  c.links.push_back({"sum tr(M_i) >= p + sum_{i>=5} (4-i) f_i", Rational(c.trisum_lower_trace),
                     Rational(c.p + high_faces), false});
  c.links.push_back({"sum tr(M_i) >= p - (2 f2 + f3 - 4)", Rational(c.trisum_lower_trace),
                     Rational(c.p - (2 * f2 + f3 - 4)), false});
  c.links.push_back({"sum sigma(M_i) >= -(n-q)/2 + sum tr(M_i)/2 + sum b(M_i)/2", Rational(c.trisum_sigma),
                     half(-(n - c.q) + c.trisum_lower_trace + c.trisum_block_dim), false});
  c.links.push_back({"every sigma(M_i) meets its own lower bound", Rational(columns_meeting_bound), Rational(n), true});
  c.links.push_back({"per-column bounds sum to the previous right-hand side", half(per_column_bound_twice),
                     half(-(n - c.q) + c.trisum_lower_trace + c.trisum_block_dim), true});
  c.links.push_back({"p + q - n + f3' >= 0", Rational(c.p + c.q - n + c.f3_used), Rational(0), false});
  c.links.push_back({"sum sigma(G_j) >= -(f2 + f3)/2 + 2", Rational(c.sigma_sum), c.bound, false});
  return c;
}

// ---------------------------------------------------------------------------
// Whole-braid report

struct ProofOptions {
  std::optional<long> max_steps;  ///< reduction budget; default 10 cr^2
  bool alexander = true;          ///< also compute the Alexander polynomial and its unit-circle zeros
  double tolerance = kUnitCircleTolerance;
};

/// Everything computed for one braid word. Failures are recorded, never
/// thrown; `skip_reason` is set whenever the subspace argument was not run.
struct ProofReport {
  BraidWord word;
  BraidWord reduced;
  std::size_t reduction_steps = 0;
  bool budget_exhausted = false;
  LinkKind kind = LinkKind::unknot;
  int torus_k = 0;
  int cr = 0;  ///< of the reduced word
  int n = 0;   ///< generators of the reduced word
  int b1 = 0;

  bool sigma_known = false;
  long sigma = 0;
  bool cross_checked = false;  ///< Gordon-Litherland and Seifert routes both ran on the input word
  long sigma_gl = 0;
  long sigma_oracle = 0;
  long nullity = 0;

  bool alexander_computed = false;
  IntPolynomial alexander;
  int zeros_on_circle = 0;
  int zeros_total = 0;

  // subspace argument (reduced generic words)
  bool pipeline_run = false;
  std::string skip_reason;
  FaceCensus census;
  int h1_black = 0;
  int h1_white = 0;
  long sigma_black = 0;
  long sigma_white = 0;
  std::array<long, 4> dims{};
  std::array<long, 4> gram_sigmas{};
  std::array<bool, 4> certified{};
  std::array<Rational, 4> eq9_slack{};
  DimensionCheck lemma43;
  SignatureSumCheck lemma44;
  std::vector<ChainLink> final_chain;
  Rational eq10_slack;

  bool theorem_checked = false;
  long theorem_slack = 0;  ///< 4 sigma - b1 - 2

  std::vector<std::string> notes;
  std::vector<std::string> failures;
  std::vector<ProofReport> parts;

  bool skipped() const { return !pipeline_run; }
  bool passed() const {
    if (!failures.empty()) return false;
    return std::all_of(parts.begin(), parts.end(), [](const ProofReport& r) { return r.passed(); });
  }
};

namespace detail {

inline void run_subspace_argument(const StandardDiagram& d, ProofReport& r) {
  r.census = face_census(d);
  const auto cb = chessboard(d);
  r.h1_black = cb.h1_black;
  r.h1_white = cb.h1_white;
  const auto gl = gordon_litherland(d);
  r.sigma_black = gl.sigma_black;
  r.sigma_white = gl.sigma_white;
  if (static_cast<long>(gl.dim_black) != cb.h1_black || static_cast<long>(gl.dim_white) != cb.h1_white) {
    r.failures.push_back("Goeritz dimensions differ from the chessboard Betti numbers");
  }
  const long sigma = gl.sigma;
  const auto bases = select_bases(d);
  std::array<SymmetricMatrix, 4> grams;
  std::array<DecompositionProof, 4> proofs;
  long sum_sig_dim = 0;
  for (std::size_t j = 0; j < 4; ++j) {
    grams[j] = gram(d, bases[j]);
    proofs[j] = decompose_structure(grams[j], bases[j]);
    r.certified[j] = proofs[j].certified;
    if (!proofs[j].certified) r.failures.push_back("G_" + std::to_string(j) + " not certified: " + proofs[j].failure);
    r.dims[j] = static_cast<long>(bases[j].dim());
    r.gram_sigmas[j] = signature(grams[j]).signature();
    sum_sig_dim += r.gram_sigmas[j] + r.dims[j];
    const long form_sigma = (j % 2 == 0) ? gl.sigma_black : gl.sigma_white;
    const long form_dim = static_cast<long>((j % 2 == 0) ? gl.dim_black : gl.dim_white);
    r.eq9_slack[j] = Rational(form_sigma + form_dim - r.gram_sigmas[j] - r.dims[j]);
    if (r.eq9_slack[j] < 0) r.failures.push_back("subspace bound fails for X_" + std::to_string(j));
    for (const auto& note : bases[j].column1_notes) r.notes.push_back("B_" + std::to_string(j) + ": " + note);
  }
  const int n = d.generators();
  const int cr = d.crossings();
  r.lemma43 = check_lemma43(bases, r.census, n);
  if (r.lemma43.slack < 0) r.failures.push_back("dimension bound (sum dim X_j) fails");
  if (std::all_of(r.certified.begin(), r.certified.end(), [](bool b) { return b; })) {
    r.lemma44 = check_lemma44(grams, bases, proofs, r.census, n);
    for (const auto& link : r.lemma44.links) {
      if (!link.holds()) r.failures.push_back("signature-sum chain: " + link.name);
    }
  }
  const long f2 = r.census.f(2), f3 = r.census.f(3);
  const long b1 = cr - n;
  auto& chain = r.final_chain;
  chain.push_back({"4 sigma - 2 cr = 2 sigma(G_B) + 2 sigma(G_W)", Rational(4 * sigma - 2 * cr),
                   Rational(2 * gl.sigma_black + 2 * gl.sigma_white), true});
  chain.push_back({"h1(S_B) + h1(S_W) = cr", Rational(cb.h1_black + cb.h1_white), Rational(cr), true});
  chain.push_back({"2 sigma(G_B) + 2 sigma(G_W) >= sum (sigma(G_j) + dim X_j) - 2 (h1(S_B) + h1(S_W))",
                   Rational(2 * gl.sigma_black + 2 * gl.sigma_white),
                   Rational(sum_sig_dim - 2 * (cb.h1_black + cb.h1_white)), false});
  chain.push_back({"sum (sigma(G_j) + dim X_j) >= -(f2 + f3)/2 + 2 + f2 + (f3 - 1)/2 + cr - n", Rational(sum_sig_dim),
                   half(-(f2 + f3) + 4) + Rational(f2) + half(f3 - 1) + Rational(cr - n), false});
  const Rational eq10_rhs = half(3) + half(f2) + Rational(cr - n);
  chain.push_back({"4 sigma >= 3/2 + f2/2 + cr - n", Rational(4 * sigma), eq10_rhs, false});
  chain.push_back({"3/2 + f2/2 + cr - n >= 3/2 + b1", eq10_rhs, half(3) + Rational(b1), false});
  chain.push_back({"4 sigma >= 2 + b1", Rational(4 * sigma), Rational(2 + b1), false});
  r.eq10_slack = Rational(4 * sigma) - eq10_rhs;
  for (const auto& link : chain) {
    if (!link.holds()) r.failures.push_back("final chain: " + link.name);
  }
  r.pipeline_run = true;
}

}  // namespace detail

/// Reduces the word, classifies it, cross-checks the two signature routes
/// and the counting identities, and for generic reduced words runs the
/// subspace argument end to end. Split and connected-sum words recurse into
/// their parts.
inline ProofReport check_final(const BraidWord& word, const ProofOptions& opts = {}) {
  ProofReport r;
  r.word = word;
  const auto trace = reduce(word, opts.max_steps);
  r.reduced = trace.result;
  r.reduction_steps = trace.steps.size();
  r.budget_exhausted = trace.budget_exhausted;
  const auto cls = classify(r.reduced);
  r.kind = cls.kind;
  r.torus_k = cls.torus_k;
  r.cr = r.reduced.crossings();
  r.n = r.reduced.generators();
  r.b1 = split_betti(r.reduced);
  if (split_betti(word) != r.b1) r.failures.push_back("reduction changed b1");

  auto guarded = [&](const char* what, auto&& fn) {
    try {
      fn();
    } catch (const std::exception& e) {
      r.failures.push_back(std::string(what) + ": " + e.what());
    }
  };

  if (word.is_nonsplit() && word.strands() > 1) {
    guarded("input diagram", [&] {
      const StandardDiagram d(word);
      face_census(d);
      chessboard(d);
      r.sigma_gl = gl_signature(d);
      const auto oracle = oracle_signature_nullity(word);
      r.sigma_oracle = oracle.sigma;
      r.nullity = oracle.nullity;
      r.cross_checked = true;
      if (r.sigma_gl != r.sigma_oracle) r.failures.push_back("Gordon-Litherland and Seifert signatures differ");
      r.sigma = r.sigma_oracle;
      r.sigma_known = true;
      if (r.reduced != word && r.reduced.is_nonsplit() && r.reduced.strands() > 1) {
        if (oracle_signature_nullity(r.reduced).sigma != r.sigma) r.failures.push_back("reduction changed the signature");
      }
    });
    if (opts.alexander) {
      guarded("alexander", [&] {
        r.alexander = alexander(word);
        r.alexander_computed = true;
        const int b1 = betti(word);
        if (r.alexander.degree() != b1) r.failures.push_back("Alexander degree differs from cr - n");
        if (abs(r.alexander.coefficients().back()) != 1 || abs(r.alexander.coefficients().front()) != 1) {
          r.failures.push_back("Alexander polynomial is not monic");
        }
        if (!r.alexander.is_reciprocal_up_to_sign()) r.failures.push_back("Alexander polynomial is not reciprocal");
        const auto zeros = unit_circle_zeros(r.alexander, opts.tolerance);
        r.zeros_on_circle = zeros.on_circle;
        r.zeros_total = zeros.total;
        if (b1 > 0) {
          if (4 * zeros.on_circle <= zeros.total) r.failures.push_back("at most a quarter of the Alexander zeros on the unit circle");
          if (r.sigma_known && zeros.on_circle < r.sigma) r.failures.push_back("fewer unit-circle zeros than the signature");
        }
      });
    }
  } else if (word.strands() == 1) {
    r.sigma_known = true;
    r.sigma = 0;
  }

  switch (cls.kind) {
    case LinkKind::unknot:
      r.skip_reason = "unlink";
      r.sigma_known = true;
      r.sigma = 0;
      break;
    case LinkKind::split:
    case LinkKind::connected_sum: {
      long total = 0;
      bool known = true;
      for (const auto& part : cls.parts) {
        r.parts.push_back(check_final(part, opts));
        total += r.parts.back().sigma;
        known = known && r.parts.back().sigma_known;
      }
      if (cls.kind == LinkKind::split) {
        r.skip_reason = "split: parts checked separately";
        r.sigma_known = known;
        r.sigma = total;
      } else {
        r.skip_reason = "connected sum: parts checked separately";
        if (known && r.sigma_known && total != r.sigma) r.failures.push_back("signature is not additive over the connected sum");
        if (!r.sigma_known) {
          r.sigma_known = known;
          r.sigma = total;
        }
      }
      break;
    }
    case LinkKind::torus2k:
      r.skip_reason = "(2,k)-torus link: closed form";
      if (r.sigma_known && r.sigma != cls.torus_k - 1) r.failures.push_back("torus link signature differs from k - 1");
      if (r.b1 != cls.torus_k - 1) r.failures.push_back("torus link b1 differs from k - 1");
      break;
    case LinkKind::generic:
      guarded("subspace argument", [&] {
        const StandardDiagram d(r.reduced);
        if (!lemma41_holds(d)) {
          r.skip_reason = "reduced word has a column without a face of four or more sides";
        } else if (detail::find_relation_site(r.reduced)) {
          r.skip_reason = "reduced word still admits an index-lowering braid relation";
        } else {
          detail::run_subspace_argument(d, r);
          if (r.sigma_known && gl_signature(d) != r.sigma) r.failures.push_back("reduced diagram gives another signature");
        }
      });
      break;
  }

  if (r.b1 > 0 && r.sigma_known) {
    r.theorem_checked = true;
    r.theorem_slack = 4 * r.sigma - r.b1 - 2;
    if (r.theorem_slack < 0) r.failures.push_back("sigma >= b1/4 + 1/2 fails");
  }
  return r;
}

}  // namespace posbraid
