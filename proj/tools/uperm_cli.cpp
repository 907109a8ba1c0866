#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "uperm/overlap_graph.hpp"
#include "uperm/search.hpp"
#include "uperm/shortener.hpp"

using nlohmann::json;
using namespace uperm;

namespace {

constexpr const char* kVersion = "1.0.0";

std::string fnv1a(const std::string& s) {
  unsigned long long h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

json manifest(const std::string& command, const json& params,
              const json& seed, const std::string& output) {
  return json{{"command", command},
              {"parameters", params},
              {"version", kVersion},
              {"seed", seed},
              {"output_digest", fnv1a(output)}};
}

std::string perm_str(const std::vector<int>& p) {
  std::string s;
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(p[i]);
  }
  return s;
}

json report_json(const CoverageReport& r) {
  json covers = json::object();
  for (const auto& [perm, wins] : r.covers) covers[perm_str(perm)] = wins;
  json misses = json::array();
  for (const auto& p : r.misses) misses.push_back(perm_str(p));
  json dups = json::array();
  for (const auto& [perm, wins] : r.duplicates)
    dups.push_back(json{{"permutation", perm_str(perm)}, {"windows", wins}});
  json j{{"verdict", to_string(r.verdict)},
         {"covers", covers},
         {"misses", misses},
         {"duplicates", dups}};
  if (r.min_equal_gap != kInfiniteGap) j["min_equal_gap"] = r.min_equal_gap;
  return j;
}

void print_report_text(std::ostream& os, const CoverageReport& r) {
  os << "verdict: " << to_string(r.verdict) << "\n";
  if (r.min_equal_gap != kInfiniteGap)
    os << "min equal-letter gap: " << r.min_equal_gap << "\n";
  if (!r.misses.empty()) {
    os << "missed permutations:";
    for (const auto& p : r.misses) os << "  " << perm_str(p);
    os << "\n";
  }
  for (const auto& [perm, wins] : r.duplicates) {
    os << "duplicate: " << perm_str(perm) << " covered by windows";
    for (int w : wins) os << " " << w;
    os << "\n";
  }
}

int cmd_generate(const std::string& kind, int n, int k, const std::string& mode,
                 const std::string& format, int budget) {
  PWord word;
  json seed = nullptr;
  if (kind == "uword") {
    word = make_pword(generate_uword(n, k), n, false);
  } else if (kind == "ucycle") {
    seed = ucycle_seed(n, k);
    auto res = generate_ucycle(n, k, budget);
    if (!res.word) {
      std::cerr << "no u-cycle found within budget (" << res.attempts
                << " attempts)\n";
      return 3;
    }
    word = make_pword(*res.word, n, true);
  } else if (kind == "restricted") {
    word = construct_restricted(n, mode == "dec" ? RestrictedMode::Decreasing
                                                 : RestrictedMode::Increasing);
  } else {
    std::cerr << "unknown kind: " << kind << "\n";
    return 2;
  }
  auto report = verify(word);
  std::string text = to_text(word);
  json params{{"kind", kind}, {"n", n}, {"k", k}, {"mode", mode}};
  if (format == "json") {
    json out{{"schema", 1},
             {"word", text},
             {"length", word.size()},
             {"report", report_json(report)},
             {"manifest", manifest("generate", params, seed, text)}};
    std::cout << out.dump(2) << "\n";
  } else {
    // report goes to stderr so `generate | verify` round-trips
    std::cout << text;
    print_report_text(std::cerr, report);
  }
  return report.exact_cover() ? 0 : 1;
}

int cmd_verify(const std::string& file, const std::string& format) {
  PWord word;
  try {
    if (file.empty()) {
      word = parse_pword(std::cin);
    } else {
      std::ifstream in(file);
      if (!in) {
        std::cerr << "cannot open " << file << "\n";
        return 2;
      }
      word = parse_pword(in);
    }
  } catch (const PWordParseError& e) {
    std::cerr << "parse error at line " << e.where.line << ", column "
              << e.where.column << ": " << e.where.message << "\n";
    return 2;
  }
  auto wf = check_well_formed(word);
  if (!wf.ok) {
    std::cerr << "malformed word: " << wf.problem << "\n";
    return 2;
  }
  if (wf.pairwise_overlap_warning)
    std::cerr << "warning: restricted diamonds in a common window overlap "
                 "pairwise\n";
  auto report = verify(word);
  if (format == "json") {
    json params{{"file", file.empty() ? "-" : file}};
    json out{{"schema", 1},
             {"word", to_text(word)},
             {"report", report_json(report)},
             {"manifest",
              manifest("verify", params, nullptr, to_string(report.verdict))}};
    std::cout << out.dump(2) << "\n";
  } else {
    print_report_text(std::cout, report);
  }
  return report.exact_cover() ? 0 : 1;
}

int cmd_analyze(int n, const std::string& dot_path) {
  auto g = build_clustered_graph(n);
  std::cout << "n = " << n << "\n";
  std::cout << "clusters: " << g.clusters.size() << "\n";
  std::cout << "edges: " << g.edges.size() << "\n";
  for (const auto& [sig, c] : g.clusters) {
    auto [a, b] = find_twins(c);
    std::cout << "cluster " << show(sig.letters()) << ": twins "
              << show(a.letters()) << " / " << show(b.letters()) << "\n";
  }
  auto cycles = double_edge_cycles(g);
  std::cout << "double-edge cycles: " << cycles.size() << "\n";
  for (const auto& cyc : cycles) {
    std::cout << "  cycle:";
    for (const auto& sig : cyc.signatures) std::cout << " " << show(sig.letters());
    std::cout << "\n";
  }
  std::cout << "balanced: " << (balanced(g) ? "yes" : "no") << "\n";
  std::cout << "strongly connected: " << (strongly_connected(g) ? "yes" : "no")
            << "\n";
  if (!dot_path.empty()) {
    std::ofstream out(dot_path);
    if (!out) {
      std::cerr << "cannot write " << dot_path << "\n";
      return 2;
    }
    out << to_dot(g);
  }
  return 0;
}

json outcome_json(const SearchOutcome& out) {
  json j{{"status", to_string(out.status)},
         {"nodes", out.nodes},
         {"prunes", out.prunes}};
  if (out.witness) {
    j["witness"] = to_text(*out.witness);
    j["witness_length"] = out.witness->size();
  }
  return j;
}

int cmd_search(const std::string& spec_file, const std::string& theorem, int n,
               int jobs) {
  if (!spec_file.empty()) {
    std::ifstream in(spec_file);
    if (!in) {
      std::cerr << "cannot open " << spec_file << "\n";
      return 2;
    }
    SearchSpec spec;
    try {
      spec = parse_search_spec(in);
    } catch (const std::exception& e) {
      std::cerr << "bad spec: " << e.what() << "\n";
      return 2;
    }
    if (jobs > 0) spec.jobs = jobs;
    auto out = search(spec);
    json params{{"spec", spec_file}, {"jobs", spec.jobs}};
    json body = outcome_json(out);
    json o{{"schema", 1},
           {"outcome", body},
           {"manifest", manifest("search", params, nullptr, body.dump())}};
    std::cout << o.dump(2) << "\n";
    return out.status == SearchOutcome::Status::BudgetExceeded ? 1 : 0;
  }
  if (theorem.empty()) {
    std::cerr << "search needs --spec or --theorem\n";
    return 2;
  }
  TheoremReport rep;
  try {
    rep = confirm_nonexistence(theorem, n);
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  json cases = json::array();
  for (const auto& c : rep.cases)
    cases.push_back(json{{"description", c.description},
                         {"method", c.method},
                         {"refuted", c.refuted},
                         {"detail", c.detail}});
  json params{{"theorem", theorem}, {"n", n}};
  json body{{"theorem", rep.theorem_id},
            {"n", rep.n},
            {"confirmed", rep.confirmed},
            {"unexpected_witness", rep.unexpected_witness},
            {"cases", cases}};
  json o{{"schema", 1},
         {"outcome", body},
         {"manifest", manifest("search", params, nullptr, body.dump())}};
  std::cout << o.dump(2) << "\n";
  return rep.confirmed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"shortened universal words and cycles for permutations"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("generate", "construct a u-word / u-cycle");
  std::string kind, mode = "inc", format = "text";
  int n = 3, k = 0, budget = 1000, jobs = 0;
  gen->add_option("kind", kind, "uword|ucycle|restricted")->required();
  gen->add_option("--n", n, "window size")->required();
  gen->add_option("--k", k, "collapsed cycles");
  gen->add_option("--mode", mode)->check(CLI::IsMember({"inc", "dec"}));
  gen->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  gen->add_option("--budget", budget, "ucycle retry budget");

  auto* ver = app.add_subcommand("verify", "exact-cover check of a p-word");
  std::string file;
  ver->add_option("--file", file, "p-word file (default: stdin)");
  ver->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* ana = app.add_subcommand("analyze", "clustered overlap graph stats");
  std::string dot_path;
  ana->add_option("--n", n)->required();
  ana->add_option("--dot", dot_path, "DOT export path");

  auto* sea = app.add_subcommand("search", "exhaustive canonical search");
  std::string spec_file, theorem;
  sea->add_option("--spec", spec_file, "key=value spec file");
  sea->add_option("--theorem", theorem, "non-existence theorem id");
  sea->add_option("--n", n);
  sea->add_option("--jobs", jobs, "worker shards");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (gen->parsed()) return cmd_generate(kind, n, k, mode, format, budget);
    if (ver->parsed()) return cmd_verify(file, format);
    if (ana->parsed()) return cmd_analyze(n, dot_path);
    if (sea->parsed()) return cmd_search(spec_file, theorem, n, jobs);
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return 2;
}
