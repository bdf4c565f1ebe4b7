#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "posbraid/diagram.hpp"
#include "posbraid/errors.hpp"
#include "posbraid/matrix.hpp"
#include "posbraid/proofpipe.hpp"
#include "posbraid/rational.hpp"

namespace posbraid {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Matrices: {"dim": d, "entries": ["p/q", ...]} row-major

inline json matrix_to_json(const SymmetricMatrix& m) {
  json entries = json::array();
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c) entries.push_back(to_string(m(r, c)));
  return {{"dim", m.dim()}, {"entries", entries}};
}

inline SymmetricMatrix matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("entries")) throw InputError("matrix JSON needs dim and entries");
  const auto dim = j.at("dim").get<std::size_t>();
  const auto& e = j.at("entries");
  if (!e.is_array() || e.size() != dim * dim) throw InputError("matrix JSON: entries must hold dim*dim values");
  std::vector<std::vector<Rational>> rows(dim, std::vector<Rational>(dim));
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      const auto& v = e[r * dim + c];
      if (v.is_number_integer()) {
        rows[r][c] = Rational(v.get<long>());
      } else if (v.is_string()) {
        rows[r][c] = parse_rational(v.get<std::string>());
      } else {
        throw InputError("matrix JSON: entries must be integers or \"p/q\" strings");
      }
    }
  }
  return SymmetricMatrix::from_rows(rows);
}

// ---------------------------------------------------------------------------
// Faces

inline json faces_to_json(const StandardDiagram& d) {
  json out = json::array();
  for (std::size_t id = 0; id < d.face_count(); ++id) {
    const auto& f = d.face(static_cast<int>(id));
    json o = {{"id", id}, {"kind", to_string(f.kind)}, {"column", f.column}, {"sides", f.sides},
              {"color", to_string(f.color)}};
    if (f.kind == FaceKind::above_crossing) {
      o["start"] = f.start;
      o["end"] = f.end;
    }
    out.push_back(std::move(o));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Proof reports

inline json report_to_json(const ProofReport& r) {
  json j;
  j["word"] = r.word.to_string();
  j["strands"] = r.word.strands();
  j["reduced"] = r.reduced.to_string();
  j["reduced_strands"] = r.reduced.strands();
  j["reduction_steps"] = r.reduction_steps;
  j["budget_exhausted"] = r.budget_exhausted;
  j["kind"] = to_string(r.kind);
  if (r.kind == LinkKind::torus2k) j["torus_k"] = r.torus_k;
  j["cr"] = r.cr;
  j["n"] = r.n;
  j["b1"] = r.b1;
  j["sigma"] = r.sigma_known ? json(r.sigma) : json(nullptr);
  if (r.cross_checked) {
    j["sigma_gl"] = r.sigma_gl;
    j["sigma_oracle"] = r.sigma_oracle;
    j["nullity"] = r.nullity;
  }
  if (r.alexander_computed) {
    json coeffs = json::array();
    for (const auto& c : r.alexander.coefficients()) coeffs.push_back(c.get_str());
    j["alexander"] = coeffs;
    j["zeros_on_circle"] = r.zeros_on_circle;
    j["zeros_total"] = r.zeros_total;
  }
  j["skipped"] = r.skipped();
  if (r.skipped()) j["skip_reason"] = r.skip_reason;
  if (r.pipeline_run) {
    json census = json::object();
    for (const auto& [sides, count] : r.census.by_sides) census[std::to_string(sides)] = count;
    j["faces_by_sides"] = census;
    j["f2"] = r.census.f(2);
    j["f3"] = r.census.f(3);
    j["f3_used"] = r.lemma44.f3_used;
    j["s"] = r.census.s;
    j["s_prime"] = r.census.s_prime;
    j["h1_black"] = r.h1_black;
    j["h1_white"] = r.h1_white;
    j["sigma_black"] = r.sigma_black;
    j["sigma_white"] = r.sigma_white;
    j["dims"] = r.dims;
    j["gram_sigmas"] = r.gram_sigmas;
    j["certified"] = r.certified;
    j["p"] = r.lemma44.p;
    j["q"] = r.lemma44.q;
    json eq9 = json::array();
    for (const auto& s : r.eq9_slack) eq9.push_back(to_string(s));
    j["subspace_slacks"] = eq9;
    j["dimension_slack"] = to_string(r.lemma43.slack);
    j["signature_sum_slack"] = to_string(r.lemma44.slack);
    auto links = [](const std::vector<ChainLink>& ls) {
      json a = json::array();
      for (const auto& l : ls) {
        a.push_back({{"name", l.name}, {"lhs", to_string(l.lhs)}, {"rhs", to_string(l.rhs)}, {"holds", l.holds()}});
      }
      return a;
    };
    j["signature_sum_chain"] = links(r.lemma44.links);
    j["final_chain"] = links(r.final_chain);
    j["final_slack"] = to_string(r.eq10_slack);
  }
  if (r.theorem_checked) j["theorem_slack"] = r.theorem_slack;
  if (!r.notes.empty()) j["notes"] = r.notes;
  j["failures"] = r.failures;
  j["passed"] = r.passed();
  if (!r.parts.empty()) {
    json parts = json::array();
    for (const auto& p : r.parts) parts.push_back(report_to_json(p));
    j["parts"] = parts;
  }
  return j;
}

inline const char* kCsvHeader = "word,strands,cr,n,b1,sigma,slack,skipped,passed";

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

/// word, strands, cr, n, b1, sigma, theorem slack, skipped, passed.
/// cr and n are those of the input word; empty cells mean "not computed".
inline void write_csv_row(std::ostream& os, const ProofReport& r) {
  os << csv_escape(r.word.to_string()) << ',' << r.word.strands() << ',' << r.word.crossings() << ','
     << r.word.generators() << ',' << r.b1 << ',';
  if (r.sigma_known) os << r.sigma;
  os << ',';
  if (r.theorem_checked) os << r.theorem_slack;
  os << ',' << (r.skipped() ? 1 : 0) << ',' << (r.passed() ? 1 : 0) << '\n';
}

}  // namespace posbraid
