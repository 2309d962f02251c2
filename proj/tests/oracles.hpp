#pragma once

// Independent brute-force routes used to freeze expected values. Nothing here
// calls into the enumeration or elimination code it checks.

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include <gmpxx.h>

#include <hypercyc/sparse_matrix.hpp>

namespace oracle {

// Every ordered partition of {1..n} into m blocks, as block lists of sorted
// vertices, via all surjections {1..n} -> {0..m-1}.
inline std::vector<std::vector<std::vector<int>>> ordered_partitions(int n, int m) {
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<int> f(n, 0);
  while (true) {
    std::vector<std::vector<int>> blocks(m);
    for (int v = 0; v < n; ++v) blocks[f[v]].push_back(v + 1);
    if (std::none_of(blocks.begin(), blocks.end(), [](const auto& b) { return b.empty(); })) out.push_back(blocks);
    int i = 0;
    while (i < n && ++f[i] == m) f[i++] = 0;
    if (i == n) break;
  }
  return out;
}

// Number of orbits of ordered partitions under block rotation.
inline std::size_t rotation_orbits(int n, int m) {
  std::set<std::vector<std::vector<int>>> reps;
  for (auto p : ordered_partitions(n, m)) {
    auto best = p;
    for (int t = 0; t < m; ++t) {
      std::rotate(p.begin(), p.begin() + 1, p.end());
      best = std::min(best, p);
    }
    reps.insert(best);
  }
  return reps.size();
}

// Rank over Q by dense Gaussian elimination on rationals.
inline std::size_t rational_rank(const hypercyc::SparseIntMatrix& m) {
  std::vector<std::vector<mpq_class>> a(m.rows(), std::vector<mpq_class>(m.cols(), 0));
  for (std::size_t j = 0; j < m.cols(); ++j) {
    for (const auto& e : m.column(j)) a[e.row][j] = mpq_class(e.value);
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t p = rank;
    while (p < m.rows() && sgn(a[p][c]) == 0) ++p;
    if (p == m.rows()) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == rank || sgn(a[i][c]) == 0) continue;
      const mpq_class f = a[i][c] / a[rank][c];
      for (std::size_t j = c; j < m.cols(); ++j) a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace oracle
