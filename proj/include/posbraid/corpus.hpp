#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "posbraid/braid.hpp"
#include "posbraid/errors.hpp"

namespace posbraid {

struct CorpusFilters {
  bool nonsplit = true;
  bool generic = false;
  bool reduced_only = false;  ///< keep only words that reduce() leaves unchanged
};

struct ExhaustiveSpec {
  int max_length = 8;
  int max_strands = 4;
};

struct RandomSpec {
  std::size_t count = 1000;
  int min_length = 1;
  int max_length = 40;
  int min_strands = 2;
  int max_strands = 8;
  std::uint32_t seed = 1;
};

inline bool passes(const BraidWord& w, const CorpusFilters& f) {
  if (f.nonsplit && !w.is_nonsplit()) return false;
  if (f.generic && classify(w).kind != LinkKind::generic) return false;
  if (f.reduced_only && !reduce(w).steps.empty()) return false;
  return true;
}

/// Every word on 1..max_strands strands of length 0..max_length, ordered by
/// strands, then length, then lexicographically.
inline void for_each_exhaustive(const ExhaustiveSpec& spec, const CorpusFilters& filters,
                                const std::function<void(const BraidWord&)>& visit) {
  if (spec.max_length < 0 || spec.max_strands < 1) throw InputError("exhaustive corpus: bad bounds");
  for (int strands = 1; strands <= spec.max_strands; ++strands) {
    const int gens = strands - 1;
    for (int len = 0; len <= spec.max_length; ++len) {
      if (gens == 0 && len > 0) break;
      std::vector<int> letters(static_cast<std::size_t>(len), 1);
      while (true) {
        BraidWord w(strands, letters);
        if (passes(w, filters)) visit(w);
        int pos = len - 1;
        while (pos >= 0 && letters[static_cast<std::size_t>(pos)] == gens) {
          letters[static_cast<std::size_t>(pos)] = 1;
          --pos;
        }
        if (pos < 0) break;
        ++letters[static_cast<std::size_t>(pos)];
      }
    }
  }
}

inline std::vector<BraidWord> exhaustive_corpus(const ExhaustiveSpec& spec, const CorpusFilters& filters = {}) {
  std::vector<BraidWord> out;
  for_each_exhaustive(spec, filters, [&](const BraidWord& w) { out.push_back(w); });
  return out;
}

/// Seeded random words. Strand count and length are drawn uniformly; a draw
/// that fails the filters is discarded and redrawn.
inline std::vector<BraidWord> random_corpus(const RandomSpec& spec, const CorpusFilters& filters = {}) {
  if (spec.min_strands < 2 || spec.max_strands < spec.min_strands || spec.min_length < 0 ||
      spec.max_length < spec.min_length) {
    throw InputError("random corpus: bad bounds");
  }
  if (filters.nonsplit && spec.max_length < spec.min_strands - 1) {
    throw InputError("random corpus: lengths too short for a nonsplit word");
  }
  std::mt19937 rng(spec.seed);
  std::vector<BraidWord> out;
  out.reserve(spec.count);
  std::size_t attempts = 0;
  const std::size_t max_attempts = 1000 * (spec.count + 1);
  while (out.size() < spec.count) {
    if (++attempts > max_attempts) throw InputError("random corpus: filters reject almost every draw");
    const int strands = std::uniform_int_distribution<int>(spec.min_strands, spec.max_strands)(rng);
    const int lo = filters.nonsplit ? std::max(spec.min_length, strands - 1) : spec.min_length;
    if (lo > spec.max_length) continue;
    const int len = std::uniform_int_distribution<int>(lo, spec.max_length)(rng);
    std::uniform_int_distribution<int> letter(1, strands - 1);
    std::vector<int> letters(static_cast<std::size_t>(len));
    for (auto& l : letters) l = letter(rng);
    BraidWord w(strands, std::move(letters));
    if (passes(w, filters)) out.push_back(std::move(w));
  }
  return out;
}

}  // namespace posbraid
