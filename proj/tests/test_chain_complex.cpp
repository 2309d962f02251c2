#include <gtest/gtest.h>

#include <sstream>

#include <hypercyc/chain_complex.hpp>
#include <hypercyc/combinatorics.hpp>

#include "oracles.hpp"

using namespace hypercyc;

namespace {

OrderedSetPartition P(int n, const char* text) { return OrderedSetPartition::parse(n, text); }

std::vector<Hypergraph> family_corpus(int n) {
  std::vector<Hypergraph> out;
  for (int k = 1; k <= n; ++k) out.push_back(make_complete_k_uniform(n, k));
  for (int k = 2; k <= n; ++k) out.push_back(make_vertex1_star(n, k));
  for (int k = 2; k <= n; ++k) out.push_back(make_diagonal_hypergraph(n, k));
  for (int k = 2; k < n; ++k) out.push_back(make_star_hypergraph(n, k, n - k + 1, VertexSet::full(k - 1)));
  return out;
}

}  // namespace

TEST(FacePredicate, Examples) {
  const auto h = make_complete_k_uniform(4, 3);
  EXPECT_FALSE(face_predicate(ComplexSpec::delta(h), P(4, "1,4|2,3")));
  EXPECT_TRUE(face_predicate(ComplexSpec::delta_complement(h), P(4, "1,4|2,3")));
  const auto apart = ComplexSpec::restricted(5, {VertexSet::of({2, 3})});
  EXPECT_FALSE(face_predicate(apart, P(5, "1|2,3|4,5")));
  EXPECT_TRUE(face_predicate(apart, P(5, "1,2|3|4,5")));
  EXPECT_TRUE(face_predicate(ComplexSpec::full_cyclic(4), P(4, "1,2,3,4")));

  const auto with_required = ComplexSpec::restricted(5, {VertexSet::of({1, 2, 3})}, VertexSet::of({2, 4, 5}));
  EXPECT_TRUE(face_predicate(with_required, P(5, "1,3|2,4,5")));
  EXPECT_FALSE(face_predicate(with_required, P(5, "1,3|2,4|5")));
  EXPECT_FALSE(face_predicate(with_required, P(5, "1,2,3|4,5")));
}

TEST(ComplexSpec, RestrictedValidation) {
  EXPECT_THROW(ComplexSpec::restricted(4, {VertexSet::of({2, 5})}), ParameterError);
  EXPECT_THROW(ComplexSpec::restricted(4, {VertexSet::of({2, 3})}, VertexSet::of({2, 3})), ParameterError);
  EXPECT_THROW(ComplexSpec::restricted(4, {}, VertexSet()), ParameterError);
}

TEST(BuildComplex, BoundaryZeroCancels) {
  // [B1, B2] -> +[B1 ∪ B2] from the merge and -[B1 ∪ B2] from the wrap.
  const auto terms = boundary_terms(P(3, "1|2,3"), true);
  ASSERT_EQ(terms.size(), 2u);
  EXPECT_EQ(terms[0].first, terms[1].first);
  EXPECT_EQ(terms[0].second + terms[1].second, 0);

  for (int n = 4; n <= 6; ++n) {
    const auto c = build_complex(ComplexSpec::delta(make_complete_k_uniform(n, n - 1)));
    EXPECT_TRUE(c.boundary(0).is_zero());
    EXPECT_EQ(c.basis(0).size(), static_cast<std::size_t>(n));
  }
}

TEST(BuildComplex, DeltaCompleteThreeUniformFiveBasisSizes) {
  const auto c = build_complex(ComplexSpec::delta(make_complete_k_uniform(5, 3)));
  EXPECT_EQ(c.basis(1).size(), 20u);  // type 3+1+1, two cyclic orders each
  EXPECT_EQ(c.basis(0).size(), 15u);  // n + C(n,2)
  EXPECT_EQ(c.basis(-1).size(), 1u);
  EXPECT_TRUE(c.basis(2).empty());
  EXPECT_TRUE(c.basis(3).empty());
}

TEST(BuildComplex, FullCyclicFourBasisSizes) {
  // Orbit counting: 6, 12, 7, 1 in degrees 2, 1, 0, -1.
  ASSERT_EQ(oracle::rotation_orbits(4, 3), 12u);
  const auto c = build_complex(ComplexSpec::full_cyclic(4));
  EXPECT_EQ(c.basis(2).size(), 6u);
  EXPECT_EQ(c.basis(1).size(), 12u);
  EXPECT_EQ(c.basis(0).size(), 7u);
  EXPECT_EQ(c.basis(-1).size(), 1u);
}

TEST(BuildComplex, MatrixShapesAndColumnSupport) {
  const auto c = build_complex(ComplexSpec::full_cyclic(6));
  for (int r = c.min_degree(); r <= c.max_degree(); ++r) {
    const auto& m = c.boundary(r);
    EXPECT_EQ(m.cols(), c.basis(r).size());
    EXPECT_EQ(m.rows(), r == -1 ? 0u : c.basis(r - 1).size());
    for (std::size_t j = 0; j < m.cols(); ++j) EXPECT_LE(m.column(j).size(), static_cast<std::size_t>(r + 2));
  }
  EXPECT_EQ(static_cast<std::int64_t>(c.basis(4).size()), factorial(5));
}

TEST(BuildComplex, Lambda) {
  // Linear boundary of 1|2|3 is -[12|3] + [1|23].
  const auto terms = boundary_terms(P(3, "1|2|3"), false);
  ASSERT_EQ(terms.size(), 2u);
  EXPECT_EQ(terms[0].first.to_string(), "1,2|3");
  EXPECT_EQ(terms[0].second, -1);
  EXPECT_EQ(terms[1].first.to_string(), "1|2,3");
  EXPECT_EQ(terms[1].second, 1);

  const auto c = build_complex(ComplexSpec::lambda(make_complete_k_uniform(4, 2)));
  EXPECT_EQ(c.basis(0).size(), 14u);
  EXPECT_EQ(c.basis(1).size(), 36u);
  EXPECT_TRUE(c.basis(2).empty());
}

TEST(BuildComplex, DSquaredOnFamilies) {
  for (int n = 2; n <= 7; ++n) {
    for (const auto& h : family_corpus(n)) {
      for (auto spec : {ComplexSpec::delta(h), ComplexSpec::delta_complement(h), ComplexSpec::lambda(h)}) {
        const auto c = build_complex(spec);
        const auto check = verify_d_squared(c);
        EXPECT_TRUE(check.ok) << spec.descriptor().dump() << " degree " << check.degree << " face "
                              << check.offending_face;
      }
    }
    EXPECT_TRUE(verify_d_squared(build_complex(ComplexSpec::full_cyclic(n))).ok);
    if (n >= 3) {
      EXPECT_TRUE(verify_d_squared(build_complex(ComplexSpec::restricted(n, {VertexSet::of({2, 3})}))).ok);
      EXPECT_TRUE(verify_d_squared(build_complex(ComplexSpec::restricted(n, {VertexSet::of({1, 2})},
                                                                         VertexSet::of({2, 3})))).ok);
    }
  }
  EXPECT_TRUE(verify_d_squared(build_complex(ComplexSpec::full_cyclic(8), 2)).ok);
  EXPECT_TRUE(verify_d_squared(build_complex(ComplexSpec::delta(make_complete_k_uniform(8, 3)))).ok);
  EXPECT_TRUE(verify_d_squared(build_complex(ComplexSpec::lambda(make_complete_k_uniform(6, 2)))).ok);
}

TEST(BuildComplex, DSquaredDetectsWrongSigns) {
  // Flip one sign in a boundary matrix and the check must point at it.
  const auto c = build_complex(ComplexSpec::full_cyclic(4));
  std::vector<FaceBasis> bases;
  std::vector<SparseIntMatrix> boundaries;
  for (int r = -1; r <= 2; ++r) {
    bases.push_back(c.basis(r));
    boundaries.push_back(c.boundary(r));
  }
  auto col = boundaries[3].column(0);
  col.front().value = -col.front().value;
  boundaries[3].set_column(0, col);
  const ChainComplex broken(c.spec(), bases, boundaries);
  const auto check = verify_d_squared(broken);
  EXPECT_FALSE(check.ok);
  EXPECT_EQ(check.degree, 2);
  EXPECT_EQ(check.offending_face, c.basis(2)[0].to_string());
}

TEST(BuildComplex, PairAdditivity) {
  EXPECT_TRUE(pair_additivity_check(make_complete_k_uniform(5, 3)));
  EXPECT_TRUE(pair_additivity_check(make_diagonal_hypergraph(5, 4)));
  EXPECT_TRUE(pair_additivity_check(make_vertex1_star(6, 3)));
  for (int n = 2; n <= 7; ++n) {
    for (const auto& h : family_corpus(n)) EXPECT_TRUE(pair_additivity_check(h));
  }
}

TEST(BuildComplex, ComplementOfCompleteIsEmptyInLowDegrees) {
  for (int n = 3; n <= 7; ++n) {
    for (int k = 2; k <= n; ++k) {
      const auto counts = face_counts(ComplexSpec::delta_complement(make_complete_k_uniform(n, k)));
      const int min_blocks = (n + k - 2) / (k - 1);  // ceil(n / (k-1))
      for (int m = 1; m < min_blocks; ++m) EXPECT_EQ(counts[m - 1], 0u) << n << ' ' << k << ' ' << m;
      EXPECT_GT(counts[min_blocks - 1], 0u);
    }
  }
}

TEST(BuildComplex, EmptyComplexIsValid) {
  const auto c = build_complex(ComplexSpec::delta(make_edgeless(4)));
  for (int r = -1; r <= 2; ++r) EXPECT_TRUE(c.basis(r).empty());
  EXPECT_TRUE(verify_d_squared(c).ok);
}

TEST(BuildComplex, GoldenDump) {
  // Hand-derived: ∂[1|2|3] = [12|3] - [1|23] + [13|2]; ∂[1|3|2] = [13|2] - [1|23] + [12|3].
  std::ostringstream os;
  build_complex(ComplexSpec::full_cyclic(3)).dump(os);
  EXPECT_EQ(os.str(),
            "complex {\"kind\":\"full-cyclic\",\"n\":3}\n"
            "degree -1 basis 1\n"
            "1,2,3\n"
            "boundary -1 0 1 0\n"
            "degree 0 basis 3\n"
            "1,2|3\n"
            "1,3|2\n"
            "1|2,3\n"
            "boundary 0 1 3 0\n"
            "degree 1 basis 2\n"
            "1|2|3\n"
            "1|3|2\n"
            "boundary 1 3 2 6\n"
            "1 1 1\n"
            "1 2 1\n"
            "2 1 1\n"
            "2 2 1\n"
            "3 1 -1\n"
            "3 2 -1\n");
}

TEST(BuildComplex, ParallelBuildMatchesSerial) {
  const auto spec = ComplexSpec::delta(make_diagonal_hypergraph(7, 4));
  std::ostringstream a, b;
  build_complex(spec, 1).dump(a);
  build_complex(spec, 4).dump(b);
  EXPECT_EQ(a.str(), b.str());
}
