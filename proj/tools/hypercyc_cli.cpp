#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include <hypercyc/hypercyc.hpp>

using namespace hypercyc;

namespace {

enum Exit { kOk = 0, kFailed = 1, kUsage = 2, kResource = 3 };

struct Source {
  std::string family;
  std::string input;
  int n = 0;
  int k = 0;
  int m = 0;
  std::string core;
};

void add_source_flags(CLI::App* cmd, Source& s) {
  cmd->add_option("--family", s.family, "Hypergraph family")
      ->check(CLI::IsMember({"complete", "vertex1-star", "star", "diagonal", "edgeless", "looped"}));
  cmd->add_option("--input", s.input, "Hypergraph JSON file {\"n\":..,\"edges\":[[..],..]}");
  cmd->add_option("--n", s.n, "Vertex count");
  cmd->add_option("--k", s.k, "Edge size");
  cmd->add_option("--m", s.m, "Star: number of edges (default n-k+1)");
  cmd->add_option("--core", s.core, "Star: comma-separated core of k-1 vertices (default 1..k-1)");
}

VertexSet parse_set(const std::string& text) {
  std::vector<int> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int x = 0;
    try {
      x = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw ParameterError("bad vertex list \"" + text + "\"");
    }
    if (used != item.size() || x < 1 || x > kMaxVertices) throw ParameterError("bad vertex list \"" + text + "\"");
    v.push_back(x);
  }
  if (v.empty()) throw ParameterError("empty vertex list");
  return VertexSet::of(v);
}

void check_ceiling(int n, int max_n) {
  if (n > max_n) {
    throw ResourceError("n = " + std::to_string(n) + " exceeds the ceiling --max-n " + std::to_string(max_n));
  }
}

Hypergraph load_hypergraph(const Source& s) {
  if (!s.family.empty() && !s.input.empty()) throw ParameterError("give either --family or --input, not both");
  if (!s.input.empty()) {
    std::ifstream in(s.input);
    if (!in) throw ParameterError("cannot open " + s.input);
    return hypergraph_from_json(nlohmann::json::parse(in));
  }
  if (s.family.empty()) throw ParameterError("a hypergraph source is required: --family or --input");
  if (s.n < 1) throw ParameterError("--n must be positive");
  if (s.n > kMaxVertices) throw ResourceError("vertex count exceeds limit");
  const std::string& f = s.family;
  if (f == "edgeless") return make_edgeless(s.n);
  if (f == "looped") return make_looped(s.n);
  if (s.k < 1 || s.k > s.n) throw ParameterError("--k must lie in 1..n");
  if (f == "complete") return make_complete_k_uniform(s.n, s.k);
  if (f == "vertex1-star") return make_vertex1_star(s.n, s.k);
  if (f == "diagonal") return make_diagonal_hypergraph(s.n, s.k);
  const VertexSet core = s.core.empty() ? VertexSet::full(s.k - 1) : parse_set(s.core);
  const int m = s.m > 0 ? s.m : s.n - s.k + 1;
  return make_star_hypergraph(s.n, s.k, m, core);
}

RankMethod parse_rank(const std::string& s) {
  if (s == "exact") return RankMethod::exact;
  if (s == "certified") return RankMethod::certified;
  return RankMethod::modular;
}

// --- homology -------------------------------------------------------------

struct HomologyArgs {
  Source source;
  std::string complex = "delta";
  std::vector<std::string> forbid;
  std::string require;
  std::string format = "table";
  std::string rank = "exact";
  std::uint64_t prime = kDefaultPrime;
  unsigned jobs = 1;
  int max_n = 10;
  std::string dump;
};

ComplexSpec homology_spec(const HomologyArgs& a) {
  const ComplexKind kind = complex_kind_from_string(a.complex);
  if (kind == ComplexKind::full_cyclic || kind == ComplexKind::restricted) {
    if (!a.source.family.empty() || !a.source.input.empty()) {
      throw ParameterError("--complex " + a.complex + " takes only --n");
    }
    if (a.source.n < 1) throw ParameterError("--n must be positive");
    check_ceiling(a.source.n, a.max_n);
    if (kind == ComplexKind::full_cyclic) return ComplexSpec::full_cyclic(a.source.n);
    std::vector<VertexSet> forbidden;
    for (const auto& f : a.forbid) forbidden.push_back(parse_set(f));
    std::optional<VertexSet> required;
    if (!a.require.empty()) required = parse_set(a.require);
    return ComplexSpec::restricted(a.source.n, forbidden, required);
  }
  if (!a.forbid.empty() || !a.require.empty()) throw ParameterError("--forbid/--require apply to restricted complexes");
  Hypergraph h = load_hypergraph(a.source);
  check_ceiling(h.n(), a.max_n);
  switch (kind) {
    case ComplexKind::lambda: return ComplexSpec::lambda(std::move(h));
    case ComplexKind::delta: return ComplexSpec::delta(std::move(h));
    default: return ComplexSpec::delta_complement(std::move(h));
  }
}

void print_report_table(const HomologyReport& rep, std::ostream& os) {
  os << "complex " << rep.complex.dump() << '\n';
  os << std::setw(4) << "r" << std::setw(12) << "basis" << std::setw(12) << "rank_down" << std::setw(12) << "rank_up"
     << std::setw(12) << "h" << '\n';
  for (const auto& d : rep.degrees) {
    os << std::setw(4) << d.r << std::setw(12) << d.basis << std::setw(12) << d.rank_down << std::setw(12)
       << d.rank_up << std::setw(12) << d.h << '\n';
  }
  os << "euler " << rep.euler_homology << '\n';
}

int cmd_homology(const HomologyArgs& a) {
  const ComplexSpec spec = homology_spec(a);
  const ChainComplex c = build_complex(spec, a.jobs);
  if (!a.dump.empty()) {
    if (a.dump == "-") {
      c.dump(std::cout);
    } else {
      std::ofstream out(a.dump);
      if (!out) throw ParameterError("cannot write " + a.dump);
      c.dump(out);
    }
  }
  HomologyOptions opt;
  opt.method = parse_rank(a.rank);
  opt.prime = a.prime;
  opt.jobs = a.jobs;
  const HomologyReport rep = homology_dims(c, opt);
  if (a.format == "json") {
    std::cout << rep.to_json().dump(2) << '\n';
  } else {
    print_report_table(rep, std::cout);
  }
  if (rep.modular_mismatches > 0) {
    std::cerr << "warning: modular rank fell short of the exact rank on " << rep.modular_mismatches
              << " matrices\n";
  }
  return kOk;
}

// --- verify ---------------------------------------------------------------

struct VerifyArgs {
  bool all = false;
  std::string theorem;
  int n = 0;
  int k = 0;
  int l = 0;
  std::string input;
  int max_n = 8;
  std::string format = "table";
  std::string rank = "exact";
  unsigned jobs = 1;
  std::string out;
};

int cmd_verify(const VerifyArgs& a) {
  SuiteConfig cfg;
  cfg.max_n = a.max_n;
  cfg.jobs = a.jobs;
  cfg.rank_method = parse_rank(a.rank);
  if (a.all == !a.theorem.empty()) throw ParameterError("give exactly one of --all or --theorem");
  if (a.all) {
    if (a.max_n > kMaxVertices) throw ResourceError("--max-n exceeds the vertex limit");
    cfg.checks = standard_checks(a.max_n);
  } else {
    check_ceiling(a.n, a.max_n);
    CheckRequest req{a.theorem, a.n, a.k, a.l, {}};
    if (a.theorem == "jonsson") {
      if (!a.input.empty()) {
        std::ifstream in(a.input);
        if (!in) throw ParameterError("cannot open " + a.input);
        req.graph = Graph(hypergraph_from_json(nlohmann::json::parse(in)));
        req.n = req.graph->n();
        check_ceiling(req.n, a.max_n);
      } else {
        req.graph = complete_graph(a.n);
      }
    }
    cfg.checks.push_back(std::move(req));
  }
  const auto results = run_suite(cfg);
  const auto json = suite_to_json(results);
  if (a.format == "json") {
    std::cout << json.dump(2) << '\n';
  } else {
    std::cout << suite_table(results);
    std::size_t counts[4] = {0, 0, 0, 0};
    for (const auto& r : results) ++counts[static_cast<int>(r.verdict)];
    std::cout << "summary: " << counts[0] << " pass, " << counts[1] << " fail, " << counts[2]
              << " unverified (out of hypothesis), " << counts[3] << " error\n";
  }
  if (!a.out.empty()) {
    std::ofstream out(a.out);
    if (!out) throw ParameterError("cannot write " + a.out);
    out << json.dump(2) << '\n';
  }
  return suite_passed(results) ? kOk : kFailed;
}

// --- chromatic ------------------------------------------------------------

struct ChromaticArgs {
  Source source;
  std::string eval;
  std::string format = "table";
};

int cmd_chromatic(const ChromaticArgs& a) {
  const Hypergraph h = load_hypergraph(a.source);
  const IntPolynomial chi = chromatic_hypergraph(h);
  auto j = chi.to_json();
  BigInt x, value;
  if (!a.eval.empty()) {
    if (x.set_str(a.eval, 10) != 0) throw ParameterError("--eval expects an integer");
    value = chi.evaluate(x);
    j["eval"] = {{"x", x.get_str()}, {"value", value.get_str()}};
  }
  if (a.format == "json") {
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "coeffs " << chi.to_json()["coeffs"].dump() << '\n';
    std::cout << "chi(L) = " << chi.to_string("L") << '\n';
    if (!a.eval.empty()) std::cout << "chi(" << x << ") = " << value << '\n';
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Homology of cyclic coloring complexes of hypergraphs"};
  app.require_subcommand(1);

  HomologyArgs hom;
  auto* homology = app.add_subcommand("homology", "Build a complex and print its homology dimensions");
  add_source_flags(homology, hom.source);
  homology->add_option("--complex", hom.complex, "Complex kind")
      ->check(CLI::IsMember({"lambda", "delta", "delta-complement", "full-cyclic", "restricted"}));
  homology->add_option("--forbid", hom.forbid, "Restricted: vertex set no block may contain, e.g. 2,3");
  homology->add_option("--require", hom.require, "Restricted: vertex set some block must contain");
  homology->add_option("--format", hom.format)->check(CLI::IsMember({"table", "json"}));
  homology->add_option("--rank", hom.rank)->check(CLI::IsMember({"exact", "certified", "modular"}));
  homology->add_option("--prime", hom.prime, "Prime for modular ranks");
  homology->add_option("--jobs", hom.jobs)->check(CLI::PositiveNumber);
  homology->add_option("--max-n", hom.max_n, "Resource ceiling on n");
  homology->add_option("--dump-complex", hom.dump, "Write bases and boundary matrices to a file (- for stdout)");

  VerifyArgs ver;
  auto* verify = app.add_subcommand("verify", "Compare closed-form dimensions against computed homology");
  verify->add_flag("--all", ver.all, "Run every check with n <= --max-n");
  verify->add_option("--theorem", ver.theorem, "Check id")
      ->check(CLI::IsMember({"3.1", "3.2", "3.4", "3.5", "3.6", "4.1", "4.2", "5.1", "5.2", "5.3", "jonsson"}));
  verify->add_option("--n", ver.n);
  verify->add_option("--k", ver.k);
  verify->add_option("--l", ver.l, "Star with singletons: vertices covered by the star");
  verify->add_option("--input", ver.input, "Graph JSON for the jonsson check (default K_n)");
  verify->add_option("--max-n", ver.max_n, "Grid bound for --all and resource ceiling");
  verify->add_option("--format", ver.format)->check(CLI::IsMember({"table", "json"}));
  verify->add_option("--rank", ver.rank)->check(CLI::IsMember({"exact", "certified", "modular"}));
  verify->add_option("--jobs", ver.jobs)->check(CLI::PositiveNumber);
  verify->add_option("--out", ver.out, "Also write the JSON report here");

  ChromaticArgs chr;
  auto* chromatic = app.add_subcommand("chromatic", "Chromatic polynomial of a hypergraph");
  add_source_flags(chromatic, chr.source);
  chromatic->add_option("--eval", chr.eval, "Evaluate at an integer");
  chromatic->add_option("--format", chr.format)->check(CLI::IsMember({"table", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*homology) return cmd_homology(hom);
    if (*verify) return cmd_verify(ver);
    return cmd_chromatic(chr);
  } catch (const ResourceError& e) {
    std::cerr << "resource: " << e.what() << '\n';
    return kResource;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "input: " << e.what() << '\n';
    return kUsage;
  }
}
