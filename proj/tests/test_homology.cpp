#include <gtest/gtest.h>

#include <hypercyc/combinatorics.hpp>
#include <hypercyc/homology.hpp>

#include "oracles.hpp"

using namespace hypercyc;

namespace {

std::vector<std::int64_t> dims(const HomologyReport& rep) {
  std::vector<std::int64_t> out;
  for (const auto& d : rep.degrees) out.push_back(d.h);
  return out;
}

// Homology straight from the rational oracle ranks.
std::vector<std::int64_t> oracle_dims(const ChainComplex& c) {
  std::vector<std::int64_t> out;
  for (int r = c.min_degree(); r <= c.max_degree(); ++r) {
    const std::int64_t down = static_cast<std::int64_t>(oracle::rational_rank(c.boundary(r)));
    const std::int64_t up = r < c.max_degree() ? static_cast<std::int64_t>(oracle::rational_rank(c.boundary(r + 1))) : 0;
    out.push_back(static_cast<std::int64_t>(c.basis(r).size()) - down - up);
  }
  return out;
}

}  // namespace

TEST(Homology, FullCyclicIsBinomial) {
  for (int n = 2; n <= 6; ++n) {
    const auto rep = homology_dims(build_complex(ComplexSpec::full_cyclic(n)));
    for (int r = -1; r <= n - 2; ++r) EXPECT_EQ(rep.h(r), binomial(n - 1, r + 1)) << n << ' ' << r;
  }
}

TEST(Homology, CompleteThreeUniformOnFive) {
  const auto rep = homology_dims(build_complex(ComplexSpec::delta(make_complete_k_uniform(5, 3))));
  EXPECT_EQ(dims(rep), (std::vector<std::int64_t>{1, 5, 10, 0, 0}));
  EXPECT_EQ(rep.degrees[2].rank_down, 10u);
}

TEST(Homology, VertexOneStar) {
  const auto rep = homology_dims(build_complex(ComplexSpec::delta(make_vertex1_star(5, 3))));
  EXPECT_EQ(dims(rep), (std::vector<std::int64_t>{1, 4, 6, 0, 0}));
}

TEST(Homology, MatchesOracleRanks) {
  std::vector<ComplexSpec> specs{
      ComplexSpec::full_cyclic(5),
      ComplexSpec::delta(make_diagonal_hypergraph(5, 3)),
      ComplexSpec::delta_complement(make_complete_k_uniform(5, 2)),
      ComplexSpec::delta_complement(make_diagonal_hypergraph(5, 4)),
      ComplexSpec::lambda(make_complete_k_uniform(4, 2)),
      ComplexSpec::lambda(make_vertex1_star(5, 3)),
      ComplexSpec::restricted(5, {VertexSet::of({2, 3})}),
      ComplexSpec::delta(make_star_hypergraph(6, 3, 3, VertexSet::full(2))),
  };
  for (const auto& spec : specs) {
    const auto c = build_complex(spec);
    EXPECT_EQ(dims(homology_dims(c)), oracle_dims(c)) << spec.descriptor().dump();
  }
}

TEST(Homology, RankMethodsAgree) {
  const auto c = build_complex(ComplexSpec::delta(make_complete_k_uniform(6, 3)));
  const auto exact = homology_dims(c);
  HomologyOptions opt;
  opt.method = RankMethod::certified;
  opt.jobs = 3;
  const auto cert = homology_dims(c, opt);
  EXPECT_EQ(dims(exact), dims(cert));
  EXPECT_EQ(cert.modular_mismatches, 0u);
  opt.method = RankMethod::modular;
  opt.prime = 1'000'003;
  EXPECT_EQ(dims(homology_dims(c, opt)), dims(exact));
}

TEST(Homology, EulerConsistency) {
  for (int n = 3; n <= 6; ++n) {
    for (int k = 2; k <= n; ++k) {
      for (const auto& spec : {ComplexSpec::delta(make_complete_k_uniform(n, k)),
                               ComplexSpec::delta_complement(make_diagonal_hypergraph(n, k)),
                               ComplexSpec::lambda(make_vertex1_star(n, k))}) {
        const auto rep = homology_dims(build_complex(spec));
        EXPECT_EQ(rep.euler_faces, rep.euler_homology);
      }
    }
  }
}

TEST(Homology, ReportJsonRoundTrip) {
  const auto rep = homology_dims(build_complex(ComplexSpec::delta(make_diagonal_hypergraph(5, 4))));
  const std::string text = rep.to_json().dump(2);
  EXPECT_EQ(nlohmann::ordered_json::parse(text).dump(2), text);
  const auto j = rep.to_json();
  EXPECT_EQ(j["complex"]["kind"], "delta");
  ASSERT_EQ(j["degrees"].size(), 5u);
  EXPECT_EQ(j["degrees"][0]["r"], -1);
  EXPECT_EQ(j["degrees"][4]["basis"], 0);  // empty degrees stay in the report
}

TEST(RepresentativeCycles, TermsAndSigns) {
  const auto c = build_complex(ComplexSpec::full_cyclic(4));
  const auto chain = representative_cycle(c, VertexSet::of({2}));
  EXPECT_EQ(chain.degree, 1);
  ASSERT_EQ(chain.terms.size(), 2u);
  EXPECT_EQ(chain.terms.at(c.basis(1).find(OrderedSetPartition::parse(4, "1,2|3|4"))), 1);
  EXPECT_EQ(chain.terms.at(c.basis(1).find(OrderedSetPartition::parse(4, "1,2|4|3"))), -1);

  const auto top = representative_cycle(c, VertexSet());
  EXPECT_EQ(top.degree, 2);
  EXPECT_EQ(top.terms.size(), 6u);

  const auto bottom = representative_cycle(c, VertexSet::of({2, 3, 4}));
  EXPECT_EQ(bottom.degree, -1);
  EXPECT_EQ(bottom.terms.size(), 1u);
}

TEST(RepresentativeCycles, Errors) {
  const auto c = build_complex(ComplexSpec::full_cyclic(4));
  EXPECT_THROW(representative_cycle(c, VertexSet::of({1, 2})), ParameterError);
  EXPECT_THROW(representative_cycle(c, VertexSet::of({5})), ParameterError);
  const auto lam = build_complex(ComplexSpec::lambda(make_complete_k_uniform(4, 2)));
  EXPECT_THROW(representative_cycle(lam, VertexSet::of({2})), ParameterError);
  // All-singleton faces contain no edge.
  const auto d = build_complex(ComplexSpec::delta(make_vertex1_star(4, 3)));
  EXPECT_THROW(representative_cycle(d, VertexSet()), ParameterError);
}

TEST(RepresentativeCycles, CycleChecks) {
  const auto c = build_complex(ComplexSpec::full_cyclic(4));
  const auto check = verify_cycle(c, representative_cycle(c, VertexSet::of({2})), 1);
  EXPECT_TRUE(check.is_cycle);
  EXPECT_TRUE(check.is_nontrivial);

  Chain zero;
  zero.degree = 1;
  const auto z = verify_cycle(c, zero, 1);
  EXPECT_TRUE(z.is_cycle);
  EXPECT_FALSE(z.is_nontrivial);

  Chain single;
  single.degree = 1;
  single.add(0, 1);
  EXPECT_FALSE(verify_cycle(c, single, 1).is_cycle);
}

TEST(RepresentativeCycles, FamiliesSpanHomology) {
  for (int n = 2; n <= 6; ++n) {
    const auto c = build_complex(ComplexSpec::full_cyclic(n));
    for (int r = -1; r <= n - 2; ++r) {
      const auto chains = representative_cycles(c, r);
      ASSERT_EQ(static_cast<std::int64_t>(chains.size()), binomial(n - 1, r + 1));
      for (const auto& ch : chains) EXPECT_TRUE(verify_cycle(c, ch, r).is_cycle);
      EXPECT_EQ(rank_gain_modulo_boundaries(c, r, chains), chains.size()) << n << ' ' << r;
    }
  }
}
