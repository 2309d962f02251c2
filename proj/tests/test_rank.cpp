#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include <hypercyc/chain_complex.hpp>
#include <hypercyc/rank.hpp>

#include "oracles.hpp"

using namespace hypercyc;

namespace {

SparseIntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, double density, int spread) {
  std::bernoulli_distribution keep(density);
  std::uniform_int_distribution<int> value(-spread, spread);
  std::vector<Triplet> t;
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (keep(rng)) t.push_back({i, j, BigInt(value(rng))});
    }
  }
  return SparseIntMatrix::from_triplets(rows, cols, std::move(t));
}

// Rank-deficient product of random factors, so the rank is known in advance.
SparseIntMatrix low_rank(std::mt19937_64& rng, std::size_t rows, std::size_t cols, std::size_t inner) {
  return random_matrix(rng, rows, inner, 0.6, 3).multiply(random_matrix(rng, inner, cols, 0.6, 3));
}

}  // namespace

TEST(Rank, Identity) {
  const auto id = SparseIntMatrix::from_triplets(3, 3, {{0, 0, 1}, {1, 1, 1}, {2, 2, 1}});
  EXPECT_EQ(rank_exact(id), 3u);
  EXPECT_EQ(rank_mod_p(id, 2), 3u);
}

TEST(Rank, SmallModulusLosesRank) {
  const auto two = SparseIntMatrix::from_triplets(1, 1, {{0, 0, 2}});
  EXPECT_EQ(rank_mod_p(two, 2), 0u);
  EXPECT_EQ(rank_exact(two), 1u);
  const auto res = compute_rank(two, RankMethod::certified, 2);
  EXPECT_EQ(res.rank, 1u);
  EXPECT_TRUE(res.modular_mismatch);
  EXPECT_EQ(compute_rank(two, RankMethod::modular, 2).rank, 0u);
}

TEST(Rank, NonPrimeModulusRejected) {
  const auto two = SparseIntMatrix::from_triplets(1, 1, {{0, 0, 2}});
  EXPECT_THROW(rank_mod_p(two, 4), ParameterError);
  EXPECT_THROW(rank_mod_p(two, 1), ParameterError);
  EXPECT_THROW(compute_rank(two, RankMethod::certified, 1'000'001), ParameterError);
}

TEST(Rank, PrimalityCheck) {
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(1'000'003));
  EXPECT_TRUE(is_prime(kDefaultPrime));
  EXPECT_FALSE(is_prime(1'000'001));  // 101 * 9901
  EXPECT_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
  EXPECT_FALSE(is_prime(0));
  for (std::uint64_t n = 0; n < 2000; ++n) {
    bool trial = n >= 2;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) trial = false;
    }
    EXPECT_EQ(is_prime(n), trial) << n;
  }
}

TEST(Rank, EmptyShapes) {
  EXPECT_EQ(rank_exact(SparseIntMatrix(0, 5)), 0u);
  EXPECT_EQ(rank_exact(SparseIntMatrix(5, 0)), 0u);
  EXPECT_EQ(rank_exact(SparseIntMatrix(4, 4)), 0u);
  EXPECT_EQ(rank_mod_p(SparseIntMatrix(0, 5), 3), 0u);
}

TEST(Rank, BoundaryOfCompleteThreeUniform) {
  const auto c = build_complex(ComplexSpec::delta(make_complete_k_uniform(5, 3)));
  EXPECT_EQ(rank_exact(c.boundary(1)), 10u);
  EXPECT_EQ(rank_mod_p(c.boundary(1), 1'000'003), 10u);
  EXPECT_EQ(oracle::rational_rank(c.boundary(1)), 10u);
}

TEST(Rank, AgreesWithRationalOracle) {
  std::mt19937_64 rng(20241);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = 1 + rng() % 30, cols = 1 + rng() % 30;
    const auto m = trial % 2 == 0 ? random_matrix(rng, rows, cols, 0.25, 5) : low_rank(rng, rows, cols, 1 + rng() % 6);
    const std::size_t expected = oracle::rational_rank(m);
    EXPECT_EQ(rank_exact(m), expected);
    EXPECT_EQ(rank_exact(m.transpose()), expected);
    EXPECT_EQ(rank_mod_p(m, kDefaultPrime), expected);
  }
}

TEST(Rank, SparsePathMatchesDensePath) {
  // Above the dense threshold the Markowitz path runs; compare against the
  // rational oracle on a rank-deficient matrix with large entries.
  std::mt19937_64 rng(7);
  const auto m = low_rank(rng, kDenseRankThreshold + 40, kDenseRankThreshold + 10, 37);
  EXPECT_EQ(rank_exact(m), oracle::rational_rank(m));
  EXPECT_EQ(rank_exact(m), 37u);
  EXPECT_EQ(rank_mod_p(m, 1'000'003), 37u);
}

TEST(Rank, BoundaryMatricesAgreeAcrossMethods) {
  const auto c = build_complex(ComplexSpec::full_cyclic(6));
  for (int r = 0; r <= c.max_degree(); ++r) {
    const auto& m = c.boundary(r);
    const auto cert = compute_rank(m, RankMethod::certified);
    EXPECT_FALSE(cert.modular_mismatch);
    EXPECT_EQ(cert.rank, oracle::rational_rank(m)) << r;
  }
}

TEST(SparseMatrix, TripletsRoundTrip) {
  const auto m = SparseIntMatrix::from_triplets(3, 4, {{0, 1, 5}, {2, 3, -7}, {0, 1, -5}, {1, 0, BigInt("123456789012345678901234567890")}});
  EXPECT_EQ(m.nnz(), 2u);  // duplicates summed, zero dropped
  std::stringstream ss;
  m.write_triplets(ss);
  EXPECT_EQ(ss.str(), "3 4 2\n2 1 123456789012345678901234567890\n3 4 -7\n");
  EXPECT_EQ(SparseIntMatrix::read_triplets(ss), m);
  std::istringstream bad("2 2 1\n0 1 4\n");
  EXPECT_THROW(SparseIntMatrix::read_triplets(bad), ParameterError);
  EXPECT_THROW(SparseIntMatrix::from_triplets(2, 2, {{2, 0, 1}}), ParameterError);
}

TEST(SparseMatrix, MultiplyAndTranspose) {
  const auto a = SparseIntMatrix::from_triplets(2, 3, {{0, 0, 1}, {0, 2, 2}, {1, 1, 3}});
  const auto b = SparseIntMatrix::from_triplets(3, 2, {{0, 1, 4}, {2, 0, 5}, {1, 0, -1}});
  const auto p = a.multiply(b);
  EXPECT_EQ(p, SparseIntMatrix::from_triplets(2, 2, {{0, 0, 10}, {0, 1, 4}, {1, 0, -3}}));
  EXPECT_EQ(a.transpose().transpose(), a);
  EXPECT_EQ(a.transpose().at(2, 0), 2);
}
