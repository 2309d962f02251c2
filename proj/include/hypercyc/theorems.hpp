#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "chain_complex.hpp"
#include "chromatic.hpp"
#include "combinatorics.hpp"
#include "homology.hpp"
#include "hypergraph.hpp"
#include "parallel.hpp"

namespace hypercyc {

// Expected homology dimension per degree. Degrees absent from the map carry
// no expectation.
using DimMap = std::map<int, std::int64_t>;

// ---------------------------------------------------------------------------
// Closed forms

// Δ(H) for all k-edges through vertex 1: C(n-1, r+1) on -1..n-k-1, zero above.
inline DimMap expected_thm_3_1(int n, int k) {
  DimMap d;
  for (int r = -1; r <= n - 2; ++r) d[r] = r <= n - k - 1 ? binomial(n - 1, r + 1) : 0;
  return d;
}

// Δ(H)^C for complete k-uniform H, degrees n-k..n-2.
inline DimMap expected_thm_3_2(int n, int k) {
  DimMap d;
  for (int r = n - k + 1; r <= n - 2; ++r) d[r] = binomial(n - 1, r + 1);
  d[n - k] = binomial(n - 1, n - k - 1) + binomial(n - 1, n - k + 1);
  return d;
}

// Δ(H) for complete k-uniform H, degree n-k-1.
inline DimMap expected_thm_3_4(int n, int k) { return DimMap{{n - k - 1, binomial(n, n - k)}}; }

// complete (n-1)-uniform
inline DimMap expected_thm_3_5(int n) { return DimMap{{-1, 1}, {0, n}}; }

// complete (n-2)-uniform
inline DimMap expected_thm_3_6(int n) {
  DimMap d;
  for (int r = -1; r <= 1; ++r) d[r] = binomial(n, r + 1);
  return d;
}

// Star hypergraph without singletons: C(n-k+1, r+1) on -1..n-k-1.
inline DimMap expected_thm_4_1(int n, int k) {
  DimMap d;
  for (int r = -1; r <= n - k - 1; ++r) d[r] = binomial(n - k + 1, r + 1);
  return d;
}

// Star on l vertices plus n-l singletons. `coefficient` is
// |chi_G^{(n-l+1)}(0)| / (n-l+1)! for the contracted graph G. The middle
// range formula juxtaposes a binomial and the chromatic factor; both the
// product and the sum reading are produced.
struct StarWithSingletonsExpectation {
  DimMap top;             // degree n-k-1
  DimMap low;             // r < l-k-2
  DimMap middle_product;  // l-k-2 <= r < n-k-1
  DimMap middle_sum;
};

inline StarWithSingletonsExpectation expected_cor_4_2(int n, int l, int k, std::int64_t coefficient) {
  StarWithSingletonsExpectation e;
  e.top[n - k - 1] = coefficient + (l - k - 1);
  for (int r = -1; r < n - k - 1; ++r) {
    if (r < l - k - 2) {
      e.low[r] = binomial(n - k, r + 1);
    } else {
      const std::int64_t head = binomial(n - k, r + 1) - binomial(n - l + 1, (n - k - 1) - r);
      const std::int64_t b = binomial(n - l, (n - k - 1) - (r + 1));
      e.middle_product[r] = head + b * coefficient;
      e.middle_sum[r] = head + b + coefficient;
    }
  }
  return e;
}

// The same expressions with the contracted graph counted on n-k+2 vertices:
// n-k becomes n-k+1 and l-k-1 becomes l-k, product reading, applied on
// every degree -1..n-k-1. Diagnostic only.
inline DimMap cor_4_2_recounted(int n, int l, int k, std::int64_t coefficient) {
  DimMap d;
  const int top = n - k - 1;
  for (int r = -1; r <= top; ++r) {
    if (r < l - k - 1) {
      d[r] = binomial(n - k + 1, r + 1);
    } else {
      d[r] = binomial(n - k + 1, r + 1) - binomial(n - l + 1, (n - k) - r) +
             binomial(n - l, (n - k) - (r + 1)) * coefficient;
    }
  }
  return d;
}

inline bool diagonal_in_hypothesis(int n, int k) { return k > (n + 1) / 2; }

// Δ(H)^C for the diagonal hypergraph, degrees 0..n-2.
inline DimMap expected_thm_5_1(int n, int k) {
  DimMap d;
  for (int r = 0; r <= n - 2; ++r) {
    if (r > n - k - 1) {
      d[r] = binomial(n - 1, r + 1);
    } else {
      d[r] = binomial(n - 1, r + 1) - (n - k) * binomial(n - k - 1, r) - binomial(n - k, r + 1);
    }
  }
  return d;
}

// Cyclic classes keeping 2 and 3 apart: C(n-2, r) on -1..n-2.
inline DimMap expected_lemma_5_2(int n) {
  DimMap d;
  for (int r = -1; r <= n - 2; ++r) d[r] = binomial(n - 2, r);
  return d;
}

// Δ(H) for the diagonal hypergraph.
inline DimMap expected_thm_5_3(int n, int k) {
  DimMap d;
  d[-1] = 1;
  for (int r = 0; r <= n - k - 1; ++r) d[r] = (n - k) * binomial(n - k - 1, r) + binomial(n - k, r + 1);
  return d;
}

// ---------------------------------------------------------------------------
// Checks

enum class Verdict { pass, fail, unverified, error };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::unverified: return "unverified";
    case Verdict::error: return "error";
  }
  return "?";
}

struct CheckRequest {
  std::string theorem;  // "3.1" "3.2" "3.4" "3.5" "3.6" "4.1" "4.2" "5.1" "5.2" "5.3" "jonsson"
  int n = 0;
  int k = 0;
  int l = 0;                  // 4.2: vertices covered by the star
  std::optional<Graph> graph;  // jonsson
};

struct TheoremCheck {
  std::string theorem;
  nlohmann::ordered_json params;
  nlohmann::ordered_json complex;
  DimMap expected;
  std::vector<std::int64_t> computed;  // degrees -1..n-2
  Verdict verdict = Verdict::error;
  bool in_hypothesis = true;
  bool d_squared_ok = false;
  bool euler_ok = false;
  bool modular_agrees = true;  // only meaningful with RankMethod::certified
  std::vector<std::string> notes;

  std::int64_t computed_at(int r) const {
    const int i = r + 1;
    return (i >= 0 && i < static_cast<int>(computed.size())) ? computed[i] : 0;
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["theorem"] = theorem;
    j["params"] = params;
    j["complex"] = complex;
    j["expected"] = nlohmann::ordered_json::array();
    for (auto [r, v] : expected) j["expected"].push_back({{"r", r}, {"h", v}});
    j["computed"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < computed.size(); ++i) {
      j["computed"].push_back({{"r", static_cast<int>(i) - 1}, {"h", computed[i]}});
    }
    j["verdict"] = to_string(verdict);
    j["in_hypothesis"] = in_hypothesis;
    j["d_squared_ok"] = d_squared_ok;
    j["euler_ok"] = euler_ok;
    j["modular_agrees"] = modular_agrees;
    j["notes"] = notes;
    return j;
  }
};

struct SuiteConfig {
  std::vector<CheckRequest> checks;
  int max_n = 8;
  unsigned jobs = 1;
  RankMethod rank_method = RankMethod::exact;
};

namespace detail {

struct Computed {
  ChainComplex complex;
  HomologyReport report;
};

inline Computed compute(const ComplexSpec& spec, const SuiteConfig& cfg, TheoremCheck& out) {
  ChainComplex c = build_complex(spec);
  out.complex = spec.descriptor();
  out.d_squared_ok = verify_d_squared(c).ok;
  HomologyOptions opt;
  opt.method = cfg.rank_method;
  HomologyReport rep = homology_dims(c, opt);
  out.euler_ok = rep.euler_faces == rep.euler_homology;
  out.modular_agrees = rep.modular_mismatches == 0;
  for (const auto& d : rep.degrees) out.computed.push_back(d.h);
  return Computed{std::move(c), std::move(rep)};
}

inline bool matches(const TheoremCheck& c, const DimMap& expected) {
  for (auto [r, v] : expected) {
    if (c.computed_at(r) != v) return false;
  }
  return true;
}

inline void finish(TheoremCheck& c) {
  if (!c.d_squared_ok) {
    c.verdict = Verdict::fail;
    c.notes.push_back("boundary does not square to zero");
    return;
  }
  if (!c.in_hypothesis) {
    c.verdict = Verdict::unverified;
    return;
  }
  c.verdict = matches(c, c.expected) ? Verdict::pass : Verdict::fail;
}

inline std::string dims_text(const DimMap& d) {
  std::ostringstream os;
  bool first = true;
  for (auto [r, v] : d) {
    os << (first ? "" : " ") << r << ':' << v;
    first = false;
  }
  return os.str();
}

inline void require(bool ok, const std::string& what) {
  if (!ok) throw ParameterError(what);
}

inline TheoremCheck run_check(const CheckRequest& req, const SuiteConfig& cfg) {
  TheoremCheck out;
  out.theorem = req.theorem;
  out.params = nlohmann::ordered_json::object();
  out.params["n"] = req.n;
  if (req.theorem != "5.2" && req.theorem != "jonsson") out.params["k"] = req.k;
  if (req.theorem == "4.2") out.params["l"] = req.l;
  if (req.theorem == "jonsson" && req.graph) out.params["graph"] = to_json(req.graph->hypergraph());
  const int n = req.n;
  const int k = req.k;
  try {
    if (n > cfg.max_n) throw ResourceError("n = " + std::to_string(n) + " exceeds ceiling " + std::to_string(cfg.max_n));
    const std::string& t = req.theorem;
    if (t == "3.1") {
      require(2 <= k && k <= n, "check 3.1 needs 2 <= k <= n");
      compute(ComplexSpec::delta(make_vertex1_star(n, k)), cfg, out);
      out.expected = expected_thm_3_1(n, k);
    } else if (t == "3.2") {
      require(2 <= k && k <= n, "check 3.2 needs 2 <= k <= n");
      compute(ComplexSpec::delta_complement(make_complete_k_uniform(n, k)), cfg, out);
      out.expected = expected_thm_3_2(n, k);
    } else if (t == "3.4") {
      require(2 <= k && k < n, "check 3.4 needs 2 <= k < n");
      compute(ComplexSpec::delta(make_complete_k_uniform(n, k)), cfg, out);
      out.expected = expected_thm_3_4(n, k);
    } else if (t == "3.5") {
      require(n >= 3, "check 3.5 needs n >= 3");
      out.params["k"] = n - 1;
      compute(ComplexSpec::delta(make_complete_k_uniform(n, n - 1)), cfg, out);
      out.expected = expected_thm_3_5(n);
    } else if (t == "3.6") {
      require(n >= 4, "check 3.6 needs n >= 4");
      out.params["k"] = n - 2;
      compute(ComplexSpec::delta(make_complete_k_uniform(n, n - 2)), cfg, out);
      out.expected = expected_thm_3_6(n);
    } else if (t == "4.1") {
      require(2 <= k && k < n, "check 4.1 needs 2 <= k < n");
      compute(ComplexSpec::delta(make_star_hypergraph(n, k, n - k + 1, VertexSet::full(k - 1))), cfg, out);
      out.expected = expected_thm_4_1(n, k);
    } else if (t == "4.2") {
      const int l = req.l;
      require(2 <= k && k + 1 <= l && l <= n, "check 4.2 needs a star with at least two edges on l <= n vertices");
      const Hypergraph h = make_star_hypergraph(n, k, l - k + 1, VertexSet::full(k - 1));
      compute(ComplexSpec::delta(h), cfg, out);
      const ContractedGraph g = contract_core(h);
      const IntPolynomial chi = chromatic_deletion_contraction(g.graph);
      const BigInt coeff = scaled_derivative_at_zero(chi, n - l + 1);
      out.notes.push_back("contracted graph: " + to_json(g.graph.hypergraph()).dump() + ", chi = " + chi.to_string("L"));
      const auto e = expected_cor_4_2(n, l, k, coeff.get_si());
      out.expected = e.top;
      out.expected.insert(e.low.begin(), e.low.end());
      DimMap computed_middle;
      for (auto [r, v] : e.middle_product) computed_middle[r] = out.computed_at(r);
      const bool product_ok = matches(out, e.middle_product);
      const bool sum_ok = matches(out, e.middle_sum);
      std::string which = product_ok && sum_ok ? "both readings" : product_ok ? "product reading"
                                                              : sum_ok       ? "sum reading"
                                                                             : "neither reading";
      out.notes.push_back("middle range: " + which + " matches computed dims (computed " +
                          dims_text(computed_middle) + "; product " + dims_text(e.middle_product) + "; sum " +
                          dims_text(e.middle_sum) + ")");
      const DimMap recount = cor_4_2_recounted(n, l, k, coeff.get_si());
      out.notes.push_back(std::string("recounted with n-k+2 contracted vertices: ") +
                          (matches(out, recount) ? "matches" : "does not match") + " computed dims (" +
                          dims_text(recount) + ")");
    } else if (t == "5.1" || t == "5.3") {
      require(2 <= k && k <= n, "diagonal hypergraph needs 2 <= k <= n");
      const Hypergraph h = make_diagonal_hypergraph(n, k);
      if (t == "5.1") {
        compute(ComplexSpec::delta_complement(h), cfg, out);
        out.expected = expected_thm_5_1(n, k);
        out.notes.push_back("degree -1 carries no expectation; the edge count l does not enter the formula");
      } else {
        compute(ComplexSpec::delta(h), cfg, out);
        out.expected = expected_thm_5_3(n, k);
      }
      out.in_hypothesis = diagonal_in_hypothesis(n, k);
      if (!out.in_hypothesis) out.notes.push_back("out of hypothesis: k <= ceil(n/2)");
    } else if (t == "5.2") {
      require(n >= 3, "check 5.2 needs n >= 3");
      compute(ComplexSpec::restricted(n, {VertexSet::of({2, 3})}), cfg, out);
      out.expected = expected_lemma_5_2(n);
    } else if (t == "jonsson") {
      require(req.graph.has_value(), "jonsson check needs a graph");
      const Graph& g = *req.graph;
      require(g.n() == n && !g.edges().empty(), "jonsson check needs a graph on n vertices with an edge");
      compute(ComplexSpec::lambda(g.hypergraph()), cfg, out);
      const IntPolynomial chi = chromatic_hypergraph(g.hypergraph());
      const BigInt at_minus_one = chi.evaluate(BigInt(-1));
      for (int r = -1; r <= n - 2; ++r) out.expected[r] = 0;
      out.expected[n - 3] = BigInt(abs(at_minus_one) - 1).get_si();
      out.notes.push_back("chi(-1) = " + at_minus_one.get_str());
    } else {
      throw ParameterError("unknown check \"" + t + "\"");
    }
    finish(out);
  } catch (const std::exception& e) {
    out.verdict = Verdict::error;
    out.notes.push_back(e.what());
  }
  return out;
}

}  // namespace detail

inline TheoremCheck run_check(const CheckRequest& req, const SuiteConfig& cfg = {}) {
  return detail::run_check(req, cfg);
}

// Runs every check; errors are recorded per check. Output order follows the
// request order regardless of parallelism.
inline std::vector<TheoremCheck> run_suite(const SuiteConfig& cfg) {
  std::vector<TheoremCheck> out(cfg.checks.size());
  parallel_for(cfg.checks.size(), cfg.jobs, [&](std::size_t i) { out[i] = detail::run_check(cfg.checks[i], cfg); });
  return out;
}

// Failing verdicts: fail or error. Unverified (out-of-hypothesis) checks do not count.
inline bool suite_passed(const std::vector<TheoremCheck>& checks) {
  for (const auto& c : checks) {
    if (c.verdict == Verdict::fail || c.verdict == Verdict::error) return false;
  }
  return true;
}

inline Graph complete_graph(int n) { return Graph(make_complete_k_uniform(n, 2)); }

// Every check over every parameter set with n <= max_n.
inline std::vector<CheckRequest> standard_checks(int max_n) {
  std::vector<CheckRequest> out;
  auto add = [&](std::string t, int n, int k, int l = 0) { out.push_back(CheckRequest{std::move(t), n, k, l, {}}); };
  for (int n = 3; n <= max_n; ++n) {
    for (int k = 2; k <= n; ++k) add("3.1", n, k);
  }
  for (int n = 4; n <= max_n; ++n) {
    for (int k = 2; k <= n; ++k) add("3.2", n, k);
  }
  for (int n = 3; n <= max_n; ++n) {
    for (int k = 2; k < n; ++k) add("3.4", n, k);
  }
  for (int n = 3; n <= max_n; ++n) add("3.5", n, n - 1);
  for (int n = 4; n <= max_n; ++n) add("3.6", n, n - 2);
  for (int n = 3; n <= max_n; ++n) {
    for (int k = 2; k < n; ++k) add("4.1", n, k);
  }
  for (int n = 4; n <= max_n; ++n) {
    for (int k = 2; k < n; ++k) {
      for (int l = k + 1; l < n; ++l) add("4.2", n, k, l);
    }
  }
  for (int n = 3; n <= max_n; ++n) {
    for (int k = 2; k <= n; ++k) add("5.1", n, k);
  }
  for (int n = 3; n <= max_n; ++n) add("5.2", n, 0);
  for (int n = 3; n <= max_n; ++n) {
    for (int k = 2; k <= n; ++k) add("5.3", n, k);
  }
  for (int n = 3; n <= max_n; ++n) out.push_back(CheckRequest{"jonsson", n, 2, 0, complete_graph(n)});
  return out;
}

inline nlohmann::ordered_json suite_to_json(const std::vector<TheoremCheck>& checks) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& c : checks) j.push_back(c.to_json());
  return j;
}

inline std::string suite_table(const std::vector<TheoremCheck>& checks) {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << to_string(c.verdict) << "  thm " << c.theorem << "  " << c.params.dump() << '\n';
    os << "    expected " << detail::dims_text(c.expected) << '\n';
    DimMap computed;
    for (std::size_t i = 0; i < c.computed.size(); ++i) computed[static_cast<int>(i) - 1] = c.computed[i];
    os << "    computed " << detail::dims_text(computed) << '\n';
    for (const auto& n : c.notes) os << "    note: " << n << '\n';
  }
  return os.str();
}

}  // namespace hypercyc
