#pragma once

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <istream>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "posbraid/errors.hpp"

namespace posbraid {

/// A positive braid word on a fixed number of strands. Letters are the
/// generator indices 1..strands-1 written out flat (no exponents).
class BraidWord {
 public:
  BraidWord() = default;

  BraidWord(int strands, std::vector<int> letters) : strands_(strands), letters_(std::move(letters)) {
    if (strands_ < 1) throw InputError("braid needs at least one strand");
    for (int l : letters_) {
      if (l < 1) throw InputError("non-positive generator index " + std::to_string(l));
      if (l >= strands_) {
        throw InputError("generator index " + std::to_string(l) + " needs more than " +
                         std::to_string(strands_) + " strands");
      }
    }
  }

  /// Strand count inferred as max index + 1.
  static BraidWord from_letters(std::vector<int> letters) {
    int top = 0;
    for (int l : letters) top = std::max(top, l);
    return BraidWord(top + 1, std::move(letters));
  }

  int strands() const { return strands_; }
  /// Number of generators n = strands - 1 (columns of the diagram).
  int generators() const { return strands_ - 1; }
  int crossings() const { return static_cast<int>(letters_.size()); }
  std::span<const int> letters() const { return letters_; }
  int operator[](std::size_t i) const { return letters_[i]; }

  int count(int generator) const {
    return static_cast<int>(std::count(letters_.begin(), letters_.end(), generator));
  }
  long index_sum() const {
    long s = 0;
    for (int l : letters_) s += l;
    return s;
  }
  /// Number of distinct generators that occur.
  int used_generators() const {
    std::vector<bool> seen(static_cast<std::size_t>(strands_), false);
    int c = 0;
    for (int l : letters_) {
      if (!seen[static_cast<std::size_t>(l)]) {
        seen[static_cast<std::size_t>(l)] = true;
        ++c;
      }
    }
    return c;
  }
  bool is_nonsplit() const { return used_generators() == generators(); }

  /// Number of components of the closure (cycles of the induced permutation).
  int components() const {
    std::vector<int> perm(static_cast<std::size_t>(strands_));
    for (int i = 0; i < strands_; ++i) perm[static_cast<std::size_t>(i)] = i;
    for (int l : letters_) std::swap(perm[static_cast<std::size_t>(l - 1)], perm[static_cast<std::size_t>(l)]);
    std::vector<bool> seen(perm.size(), false);
    int cycles = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
      if (seen[i]) continue;
      ++cycles;
      for (std::size_t k = i; !seen[k]; k = static_cast<std::size_t>(perm[k])) seen[k] = true;
    }
    return cycles;
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(letters_[i]);
    }
    return s;
  }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_ = 1;
  std::vector<int> letters_;
};

namespace detail {

inline int parse_positive_int(std::string_view tok, std::string_view what) {
  int v = 0;
  const bool negative = !tok.empty() && tok.front() == '-';
  auto body = negative ? tok.substr(1) : tok;
  auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), v);
  if (body.empty() || ec != std::errc() || ptr != body.data() + body.size()) {
    throw InputError("malformed " + std::string(what) + " '" + std::string(tok) + "'");
  }
  if (negative) v = -v;
  if (v < 1) throw InputError("non-positive " + std::string(what) + " '" + std::string(tok) + "'");
  return v;
}

}  // namespace detail

/// Parses whitespace-separated generator indices, each optionally raised to
/// a power ("1^3" = "1 1 1"). A leading "K:" fixes the strand count; without
/// it the count is max index + 1. "K:" alone is the trivial braid on K strands.
inline BraidWord parse_braid_word(std::string_view text, std::optional<int> strands = std::nullopt) {
  std::string body(text);
  if (auto colon = body.find(':'); colon != std::string::npos) {
    std::string head = body.substr(0, colon);
    head.erase(std::remove_if(head.begin(), head.end(), ::isspace), head.end());
    const int declared = detail::parse_positive_int(head, "strand count");
    if (strands && *strands != declared) throw InputError("conflicting strand counts");
    strands = declared;
    body = body.substr(colon + 1);
  }
  std::vector<int> letters;
  std::istringstream in(body);
  std::string tok;
  while (in >> tok) {
    int power = 1;
    std::string_view base = tok;
    if (auto caret = tok.find('^'); caret != std::string::npos) {
      base = std::string_view(tok).substr(0, caret);
      power = detail::parse_positive_int(std::string_view(tok).substr(caret + 1), "exponent");
    }
    const int g = detail::parse_positive_int(base, "generator index");
    if (strands && g >= *strands) {
      throw InputError("generator index " + std::to_string(g) + " needs more than " +
                       std::to_string(*strands) + " strands");
    }
    letters.insert(letters.end(), static_cast<std::size_t>(power), g);
  }
  if (letters.empty() && !strands) throw InputError("empty braid word");
  return strands ? BraidWord(*strands, std::move(letters)) : BraidWord::from_letters(std::move(letters));
}

/// One word per line; blank lines and '#' comments are ignored.
inline std::vector<BraidWord> parse_braid_file(std::istream& in) {
  std::vector<BraidWord> words;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      words.push_back(parse_braid_word(line));
    } catch (const InputError& e) {
      throw InputError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return words;
}

enum class LinkKind { unknot, split, connected_sum, torus2k, generic };

inline const char* to_string(LinkKind k) {
  switch (k) {
    case LinkKind::unknot: return "unknot";
    case LinkKind::split: return "split";
    case LinkKind::connected_sum: return "connected_sum";
    case LinkKind::torus2k: return "torus2k";
    case LinkKind::generic: return "generic";
  }
  return "?";
}

struct Classification {
  LinkKind kind = LinkKind::unknot;
  int torus_k = 0;           ///< torus2k only
  int pivot_generator = 0;   ///< split / connected_sum: the unused or once-used generator
  std::vector<BraidWord> parts;  ///< split / connected_sum: lower and upper sub-braids
};

namespace detail {

/// Letters below `g` on strands 1..g, letters above `g` shifted down by g.
inline std::vector<BraidWord> split_at(const BraidWord& w, int g) {
  std::vector<int> low, high;
  for (int l : w.letters()) {
    if (l < g) low.push_back(l);
    if (l > g) high.push_back(l - g);
  }
  return {BraidWord(g, std::move(low)), BraidWord(w.strands() - g, std::move(high))};
}

}  // namespace detail

/// First matching trivial case, in order: unknot (one strand), split (an
/// unused generator), connected sum (a generator used once), (2,k)-torus
/// link (two strands), otherwise generic.
inline Classification classify(const BraidWord& w) {
  Classification c;
  if (w.strands() == 1) return c;
  for (int g = 1; g <= w.generators(); ++g) {
    if (w.count(g) == 0) {
      c.kind = LinkKind::split;
      c.pivot_generator = g;
      c.parts = detail::split_at(w, g);
      return c;
    }
  }
  for (int g = 1; g <= w.generators(); ++g) {
    if (w.count(g) == 1) {
      c.kind = LinkKind::connected_sum;
      c.pivot_generator = g;
      c.parts = detail::split_at(w, g);
      return c;
    }
  }
  if (w.strands() == 2) {
    c.kind = LinkKind::torus2k;
    c.torus_k = w.crossings();
    return c;
  }
  c.kind = LinkKind::generic;
  return c;
}

/// First Betti number of the fibre surface, cr - n. Nonsplit words only.
inline int betti(const BraidWord& w) {
  if (!w.is_nonsplit()) throw InputError("betti: split braid word");
  return w.crossings() - w.generators();
}

/// b1 summed over the split components: cr minus the number of generators used.
inline int split_betti(const BraidWord& w) { return w.crossings() - w.used_generators(); }

// ---------------------------------------------------------------------------
// Reduction

enum class MoveKind { cyclic_shift, distant_swap, braid_relation, destabilize };

inline const char* to_string(MoveKind k) {
  switch (k) {
    case MoveKind::cyclic_shift: return "cyclic_shift";
    case MoveKind::distant_swap: return "distant_swap";
    case MoveKind::braid_relation: return "braid_relation";
    case MoveKind::destabilize: return "destabilize";
  }
  return "?";
}

/// cyclic_shift: `position` letters are rotated from the front to the back.
/// distant_swap: letters at position, position+1 (indices differ by >= 2).
/// braid_relation: s_i s_{i-1} s_i at position..position+2 becomes s_{i-1} s_i s_{i-1}.
/// destabilize: the single top generator, sitting last, is dropped with its strand.
struct Move {
  MoveKind kind;
  int position = 0;
  friend bool operator==(const Move&, const Move&) = default;
};

/// Applies one move, checking its precondition.
inline BraidWord apply_move(const BraidWord& w, const Move& m) {
  std::vector<int> l(w.letters().begin(), w.letters().end());
  const int cr = w.crossings();
  switch (m.kind) {
    case MoveKind::cyclic_shift:
      if (cr > 0) std::rotate(l.begin(), l.begin() + ((m.position % cr) + cr) % cr, l.end());
      return BraidWord(w.strands(), std::move(l));
    case MoveKind::distant_swap: {
      const auto p = static_cast<std::size_t>(m.position);
      if (m.position < 0 || m.position + 1 >= cr || std::abs(l[p] - l[p + 1]) < 2) {
        throw InputError("distant_swap precondition violated");
      }
      std::swap(l[p], l[p + 1]);
      return BraidWord(w.strands(), std::move(l));
    }
    case MoveKind::braid_relation: {
      const auto p = static_cast<std::size_t>(m.position);
      if (m.position < 0 || m.position + 2 >= cr || l[p] != l[p + 2] || l[p + 1] != l[p] - 1) {
        throw InputError("braid_relation precondition violated");
      }
      const int i = l[p];
      l[p] = i - 1;
      l[p + 1] = i;
      l[p + 2] = i - 1;
      return BraidWord(w.strands(), std::move(l));
    }
    case MoveKind::destabilize: {
      const int top = w.generators();
      if (cr == 0 || l.back() != top || w.count(top) != 1) {
        throw InputError("destabilize precondition violated");
      }
      l.pop_back();
      return BraidWord(w.strands() - 1, std::move(l));
    }
  }
  return w;
}

struct ReductionTrace {
  BraidWord input;
  std::vector<Move> steps;
  BraidWord result;
  bool budget_exhausted = false;
};

namespace detail {

struct RelationSite {
  int generator = 0;  ///< i, with i >= 2
  int lower = 0;      ///< position of the first s_i
  int upper = 0;      ///< position of the next s_i, cyclically
  int middle = 0;     ///< position of the single s_{i-1} between them
};

/// A cyclically consecutive pair of s_i (i >= 2) enclosing exactly one
/// s_{i-1} and no s_{i+1}. Everything else between them commutes with s_i,
/// so such a pair can be brought into the form s_i s_{i-1} s_i.
inline std::optional<RelationSite> find_relation_site(const BraidWord& w) {
  const int cr = w.crossings();
  for (int i = 2; i <= w.generators(); ++i) {
    std::vector<int> pos;
    for (int p = 0; p < cr; ++p) {
      if (w[static_cast<std::size_t>(p)] == i) pos.push_back(p);
    }
    if (pos.size() < 2) continue;
    for (std::size_t k = 0; k < pos.size(); ++k) {
      const int lo = pos[k];
      const int hi = pos[(k + 1) % pos.size()];
      int below = 0, above = 0, middle = -1;
      for (int p = (lo + 1) % cr; p != hi; p = (p + 1) % cr) {
        const int l = w[static_cast<std::size_t>(p)];
        if (l == i - 1) {
          ++below;
          middle = p;
        } else if (l == i + 1) {
          ++above;
        }
      }
      if (below == 1 && above == 0) return RelationSite{i, lo, hi, middle};
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Default move budget 10 * cr^2.
inline long default_step_budget(const BraidWord& w) {
  const long cr = std::max(1, w.crossings());
  return 10 * cr * cr;
}

/// Greedy rewriting toward a word with no destabilizable top generator and
/// no s_i s_{i-1} s_i reachable by conjugation and distant commutation.
/// Strand count and index sum never increase; every step preserves the
/// closure. Stops at a fixpoint or when `max_steps` moves have been made.
inline ReductionTrace reduce(const BraidWord& word, std::optional<long> max_steps = std::nullopt) {
  ReductionTrace t{word, {}, word, false};
  const long budget = max_steps.value_or(default_step_budget(word));
  BraidWord w = word;
  auto step = [&](Move m) {
    w = apply_move(w, m);
    t.steps.push_back(m);
  };
  for (;;) {
    if (static_cast<long>(t.steps.size()) >= budget) {
      t.budget_exhausted = true;
      break;
    }
    const int top = w.generators();
    if (top >= 1 && w.count(top) == 1) {
      const auto letters = w.letters();
      const int at = static_cast<int>(std::find(letters.begin(), letters.end(), top) - letters.begin());
      if (at + 1 != w.crossings()) step({MoveKind::cyclic_shift, at + 1});
      step({MoveKind::destabilize, w.crossings() - 1});
      continue;
    }
    auto site = detail::find_relation_site(w);
    if (!site) break;
    if (site->lower != 0) {
      const int shift = site->lower;
      step({MoveKind::cyclic_shift, shift});
      const int cr = w.crossings();
      site->upper = ((site->upper - shift) % cr + cr) % cr;
      site->middle = ((site->middle - shift) % cr + cr) % cr;
      site->lower = 0;
    }
    // carry the lower s_i up to the s_{i-1}, then the upper one down to it
    for (int p = site->lower; p + 1 < site->middle; ++p) step({MoveKind::distant_swap, p});
    int middle = site->middle;
    for (int p = site->upper - 1; p > middle; --p) step({MoveKind::distant_swap, p});
    step({MoveKind::braid_relation, middle - 1});
  }
  t.result = w;
  return t;
}

}  // namespace posbraid
