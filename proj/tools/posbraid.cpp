// posbraid: signatures of positive braid closures and the lower bound checker.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "posbraid/posbraid.hpp"
#include "posbraid/report.hpp"

using namespace posbraid;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitInput = 2;

struct Common {
  bool json = false;
  double tol = kUnitCircleTolerance;
  std::optional<long> max_steps;
  std::optional<int> strands;
};

ProofOptions proof_options(const Common& c) {
  ProofOptions o;
  o.max_steps = c.max_steps;
  o.tolerance = c.tol;
  return o;
}

void print_failures(const ProofReport& r, const std::string& indent = "  ") {
  for (const auto& f : r.failures) std::cout << indent << "FAIL " << f << "\n";
  for (const auto& p : r.parts) print_failures(p, indent + "  ");
}

void print_invariants(const ProofReport& r, int depth = 0) {
  const std::string pad(static_cast<std::size_t>(2 * depth), ' ');
  const auto& w = r.word;
  std::cout << pad << "word        " << (w.crossings() ? w.to_string() : "(empty)") << "  [" << w.strands()
            << " strands]\n";
  std::cout << pad << "cr " << w.crossings() << "  n " << w.generators() << "  components " << w.components()
            << "  b1 " << r.b1 << "  kind " << to_string(r.kind) << "\n";
  if (r.cross_checked) {
    std::cout << pad << "sigma (Gordon-Litherland) " << r.sigma_gl << "  sigma (Seifert) " << r.sigma_oracle
              << "  nullity " << r.nullity << "\n";
  } else if (r.sigma_known) {
    std::cout << pad << "sigma " << r.sigma << " (from parts)\n";
  }
  if (r.alexander_computed) {
    std::cout << pad << "Alexander   " << r.alexander.to_string() << "\n";
    std::cout << pad << "zeros on |t|=1: " << r.zeros_on_circle << " of " << r.zeros_total << "\n";
  }
  if (w.components() == 1 && r.sigma_known && r.b1 > 0) {
    std::cout << pad << "four-genus  g4 >= " << to_string(half(r.sigma)) << "  (Seifert genus " << to_string(half(r.b1))
              << ")\n";
  }
  if (r.theorem_checked) {
    std::cout << pad << "4 sigma - b1 - 2 = " << r.theorem_slack << "\n";
  }
  if (!r.parts.empty()) {
    std::cout << pad << (r.kind == LinkKind::split ? "split" : "connected sum") << " into " << r.parts.size()
              << " parts:\n";
    for (const auto& p : r.parts) print_invariants(p, depth + 1);
  }
}

int cmd_invariants(const std::vector<std::string>& words, const Common& c, bool dump_faces) {
  bool ok = true;
  for (const auto& text : words) {
    const auto w = parse_braid_word(text, c.strands);
    const auto r = check_final(w, proof_options(c));
    ok = ok && r.passed();
    if (c.json) {
      auto j = report_to_json(r);
      j["components"] = w.components();
      if (dump_faces && w.strands() > 1 && w.is_nonsplit()) j["faces"] = faces_to_json(build_diagram(w));
      std::cout << j.dump() << "\n";
      continue;
    }
    print_invariants(r);
    if (dump_faces && w.strands() > 1 && w.is_nonsplit()) std::cout << faces_to_json(build_diagram(w)).dump(2) << "\n";
    print_failures(r);
  }
  return ok ? kExitOk : kExitFailure;
}

struct VerifyArgs {
  std::string file;
  bool exhaustive = false;
  ExhaustiveSpec ex;
  std::optional<std::size_t> random_count;
  RandomSpec rnd;
  CorpusFilters filters;
  std::string csv;
  bool skip_report = false;
  bool quiet = false;
};

int cmd_verify(const VerifyArgs& a, const Common& c) {
  std::vector<BraidWord> corpus;
  if (!a.file.empty()) {
    std::ifstream in(a.file);
    if (!in) throw InputError("cannot open " + a.file);
    for (auto& w : parse_braid_file(in))
      if (passes(w, a.filters)) corpus.push_back(std::move(w));
  }
  if (a.exhaustive) {
    auto ex = exhaustive_corpus(a.ex, a.filters);
    corpus.insert(corpus.end(), ex.begin(), ex.end());
  }
  if (a.random_count) {
    auto spec = a.rnd;
    spec.count = *a.random_count;
    auto rnd = random_corpus(spec, a.filters);
    corpus.insert(corpus.end(), rnd.begin(), rnd.end());
  }
  if (corpus.empty()) throw InputError("verify: empty corpus (use --file, --exhaustive or --random)");

  std::ofstream csv;
  if (!a.csv.empty()) {
    csv.open(a.csv);
    if (!csv) throw InputError("cannot write " + a.csv);
    csv << kCsvHeader << "\n";
  }
  std::size_t pipeline = 0, skipped = 0, failed = 0, theorem = 0;
  std::map<std::string, std::size_t> reasons;
  const auto opts = proof_options(c);
  for (const auto& w : corpus) {
    const auto r = check_final(w, opts);
    if (c.json) std::cout << report_to_json(r).dump() << "\n";
    if (csv.is_open()) write_csv_row(csv, r);
    if (r.theorem_checked) ++theorem;
    if (!r.passed()) {
      ++failed;
      if (!c.json && !a.quiet) {
        std::cout << "FAIL " << w.to_string() << " [" << w.strands() << " strands]\n";
        print_failures(r);
      }
    } else if (r.skipped()) {
      ++skipped;
      ++reasons[r.skip_reason];
    } else {
      ++pipeline;
    }
  }
  std::ostream& out = c.json ? std::cerr : std::cout;
  out << "words " << corpus.size() << "  pipeline " << pipeline << "  skipped " << skipped << "  failed " << failed
      << "  theorem-checked " << theorem << "\n";
  out << "skip rate " << (100.0 * static_cast<double>(skipped) / static_cast<double>(corpus.size())) << "%\n";
  if (a.skip_report) {
    for (const auto& [reason, count] : reasons) out << "  skipped " << count << ": " << reason << "\n";
  }
  return failed == 0 ? kExitOk : kExitFailure;
}

struct FuzzArgs {
  int max_dim = 6;
  std::size_t trisums = 10000;
  std::size_t congruences = 1000;
  std::size_t congruence_dim = 8;
  std::uint32_t seed = 1;
};

int cmd_fuzz(const FuzzArgs& a, const Common& c) {
  const auto tri = fuzz_tridiagonal_exhaustive(a.max_dim);
  const auto tris = fuzz_trisum_random(a.trisums, a.seed);
  const auto cong = fuzz_congruence(a.congruences, a.congruence_dim, a.seed);
  struct Witness {
    std::vector<long> d;
    const char* label;
  };
  const std::vector<Witness> witnesses = {
      {{-1, -2, -2}, "negative definite, attains the bound"},
      {{0, 7, -1}, "sigma = -1"},
      {{0, 7, 0, 7, -1}, "sigma = -1"},
      {{5, 5, 5}, "positive diagonal"},
  };
  if (c.json) {
    auto summary = [](const FuzzSummary& s) {
      json j = {{"cases", s.cases}, {"failures", s.failures}};
      if (s.counterexample) j["counterexample"] = *s.counterexample;
      return j;
    };
    json w = json::array();
    for (const auto& x : witnesses) {
      const auto chk = check_prop32(x.d);
      w.push_back({{"matrix", diagonal_string(x.d)}, {"signature", chk.signature}, {"slack", to_string(chk.slack)}});
    }
    std::cout << json{{"tridiagonal", summary(tri)}, {"trisum", summary(tris)}, {"congruence", summary(cong)},
                      {"witnesses", w}}
                     .dump(2)
              << "\n";
  } else {
    auto line = [](const char* name, const FuzzSummary& s) {
      std::cout << name << ": " << s.cases << " cases, " << s.failures << " failures";
      if (s.counterexample) std::cout << "  first: " << *s.counterexample;
      std::cout << "\n";
    };
    line("tridiagonal (exhaustive)", tri);
    line("trisum (random)", tris);
    line("congruence (random)", cong);
    for (const auto& x : witnesses) {
      const auto chk = check_prop32(x.d);
      std::cout << "  " << diagonal_string(x.d) << "  sigma " << chk.signature << "  bound " << to_string(chk.bound)
                << "  slack " << to_string(chk.slack) << "  (" << x.label << ")\n";
    }
  }
  return tri.failures + tris.failures + cong.failures == 0 ? kExitOk : kExitFailure;
}

int cmd_signature(const std::string& path, const Common& c) {
  json j;
  try {
    if (path == "-") {
      j = json::parse(std::cin);
    } else {
      std::ifstream in(path);
      if (!in) throw InputError("cannot open " + path);
      j = json::parse(in);
    }
  } catch (const json::parse_error& e) {
    throw InputError(std::string("matrix JSON: ") + e.what());
  }
  const auto s = signature(matrix_from_json(j));
  if (c.json) {
    std::cout << json{{"signature", s.signature()}, {"positives", s.positives}, {"negatives", s.negatives},
                      {"nullity", s.nullity}}
                     .dump()
              << "\n";
  } else {
    std::cout << "signature " << s.signature() << "  nullity " << s.nullity << "  (+" << s.positives << " -"
              << s.negatives << ")\n";
  }
  return kExitOk;
}

int cmd_goeritz(const std::string& text, const std::string& surface, const Common& c) {
  const auto w = parse_braid_word(text, c.strands);
  if (!w.is_nonsplit()) throw InputError("goeritz: split braid word");
  const auto d = build_diagram(w);
  const Color color = surface == "black" ? Color::black : Color::white;
  const auto g = goeritz_matrix(d, color);
  const auto s = signature(g.matrix);
  json basis = json::array();
  for (std::size_t i = 0; i < g.basis.size(); ++i) basis.push_back({{"face", g.basis[i]}, {"orientation", g.orientation[i]}});
  json out = {{"surface", surface}, {"basis_color", to_string(g.basis_color)}, {"excluded", g.excluded},
              {"basis", basis}, {"matrix", matrix_to_json(g.matrix)}, {"signature", s.signature()},
              {"nullity", s.nullity}};
  std::cout << (c.json ? out.dump() : out.dump(2)) << "\n";
  return kExitOk;
}

int cmd_reduce(const std::string& text, const Common& c) {
  const auto w = parse_braid_word(text, c.strands);
  const auto t = reduce(w, c.max_steps);
  if (c.json) {
    json steps = json::array();
    for (const auto& m : t.steps) steps.push_back({{"move", to_string(m.kind)}, {"position", m.position}});
    std::cout << json{{"input", w.to_string()}, {"result", t.result.to_string()}, {"strands", t.result.strands()},
                      {"steps", steps}, {"budget_exhausted", t.budget_exhausted}}
                     .dump()
              << "\n";
  } else {
    for (const auto& m : t.steps) std::cout << to_string(m.kind) << " @" << m.position << "\n";
    std::cout << "result " << t.result.to_string() << "  [" << t.result.strands() << " strands]"
              << (t.budget_exhausted ? "  (budget exhausted)" : "") << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Signatures of positive braid closures"};
  app.require_subcommand(1);
  Common common;
  app.add_flag("--json", common.json, "machine-readable output");
  app.add_option("--tol", common.tol, "unit-circle tolerance on ||z| - 1|")->check(CLI::PositiveNumber);
  app.add_option("--max-steps", common.max_steps, "reduction step budget (default 10 cr^2)");
  app.add_option("--strands", common.strands, "strand count for words given on the command line");

  app.fallthrough();
  auto* inv = app.add_subcommand("invariants", "invariants and checks for single braid words");
  std::vector<std::string> words;
  bool dump_faces = false;
  inv->add_option("words", words, "braid words, e.g. \"1 2 2 1\" or \"1^3 2\"")->required();
  inv->add_flag("--dump-faces", dump_faces, "also print the face list");

  auto* ver = app.add_subcommand("verify", "run every check over a corpus");
  VerifyArgs va;
  ver->add_option("--file", va.file, "braid file, one word per line");
  ver->add_flag("--exhaustive", va.exhaustive, "all words up to --max-len and --max-strands");
  ver->add_option("--random", va.random_count, "number of seeded random words");
  ver->add_option("--max-len", va.ex.max_length, "maximum word length")->default_val(8);
  ver->add_option("--max-strands", va.ex.max_strands, "maximum strand count")->default_val(4);
  ver->add_option("--min-len", va.rnd.min_length, "minimum random word length")->default_val(1);
  ver->add_option("--min-strands", va.rnd.min_strands, "minimum random strand count")->default_val(2);
  ver->add_option("--seed", va.rnd.seed, "random seed")->default_val(1);
  ver->add_flag("--generic", va.filters.generic, "keep only generic words");
  ver->add_flag("--reduced-only", va.filters.reduced_only, "keep only words the reduction leaves alone");
  ver->add_option("--csv", va.csv, "write a CSV summary to this path");
  ver->add_flag("--skip-report", va.skip_report, "list skip reasons");
  ver->add_flag("--quiet", va.quiet, "only print the summary");

  auto* fz = app.add_subcommand("fuzz-matrices", "tridiagonal, trisum and congruence fuzzing");
  FuzzArgs fa;
  fz->add_option("--max-dim", fa.max_dim, "exhaustive tridiagonal dimension bound")->default_val(6);
  fz->add_option("--trisums", fa.trisums, "random trisum specs")->default_val(10000);
  fz->add_option("--congruences", fa.congruences, "random congruences")->default_val(1000);
  fz->add_option("--congruence-dim", fa.congruence_dim, "maximum congruence dimension")->default_val(8);
  fz->add_option("--seed", fa.seed, "random seed")->default_val(1);

  auto* sig = app.add_subcommand("signature", "signature and nullity of a JSON matrix");
  std::string matrix_path;
  sig->add_option("path", matrix_path, "matrix JSON file, or - for stdin")->required();

  auto* goe = app.add_subcommand("goeritz", "Goeritz matrix of one chessboard surface");
  std::string goe_word, surface = "black";
  goe->add_option("word", goe_word, "braid word")->required();
  goe->add_option("--surface", surface, "black or white")->check(CLI::IsMember({"black", "white"}));

  auto* red = app.add_subcommand("reduce", "destabilize and lower indices by braid relations");
  std::string red_word;
  red->add_option("word", red_word, "braid word")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  va.rnd.max_length = va.ex.max_length;
  va.rnd.max_strands = va.ex.max_strands;
  if (ver->parsed() && va.random_count) {
    if (ver->count("--max-len") == 0) va.rnd.max_length = 40;
    if (ver->count("--max-strands") == 0) va.rnd.max_strands = 8;
  }

  try {
    if (inv->parsed()) return cmd_invariants(words, common, dump_faces);
    if (ver->parsed()) return cmd_verify(va, common);
    if (fz->parsed()) return cmd_fuzz(fa, common);
    if (sig->parsed()) return cmd_signature(matrix_path, common);
    if (goe->parsed()) return cmd_goeritz(goe_word, surface, common);
    if (red->parsed()) return cmd_reduce(red_word, common);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitOk;
}
