#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "sparse_matrix.hpp"

namespace hypercyc {

// Matrices whose sides are both at most this size are reduced densely.
inline constexpr std::size_t kDenseRankThreshold = 256;

// Ceiling on the nonzero count of the working matrix during sparse
// elimination; exceeding it raises ResourceError.
inline constexpr std::size_t kMaxEliminationFill = std::size_t{1} << 27;

// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  auto mulmod = [n](std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
  };
  auto powmod = [&](std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    for (; e; e >>= 1, a = mulmod(a, a)) {
      if (e & 1) r = mulmod(r, a);
    }
    return r;
  };
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s && composite; ++i) {
      x = mulmod(x, x);
      if (x == n - 1) composite = false;
    }
    if (composite) return false;
  }
  return true;
}

namespace detail {

template <typename V>
using SparseRow = std::vector<std::pair<std::uint32_t, V>>;

// Fraction-free integer row operations: the target row is replaced by
// a*target - b*pivot with (a, b) the pivot-column entries divided by their
// gcd, then divided by its own content. No denominators ever appear.
struct IntegerRowOps {
  using value_type = BigInt;

  static bool is_zero(const BigInt& v) { return sgn(v) == 0; }

  static SparseRow<BigInt> eliminate(const SparseRow<BigInt>& target, const BigInt& t_pc,
                                     const SparseRow<BigInt>& pivot, const BigInt& p_pc) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), p_pc.get_mpz_t(), t_pc.get_mpz_t());
    const BigInt a = p_pc / g;
    const BigInt b = t_pc / g;
    SparseRow<BigInt> out;
    out.reserve(target.size() + pivot.size());
    std::size_t i = 0, j = 0;
    BigInt content = 0;
    while (i < target.size() || j < pivot.size()) {
      BigInt v;
      std::uint32_t c;
      if (j == pivot.size() || (i < target.size() && target[i].first < pivot[j].first)) {
        c = target[i].first;
        v = a * target[i].second;
        ++i;
      } else if (i == target.size() || pivot[j].first < target[i].first) {
        c = pivot[j].first;
        v = -b * pivot[j].second;
        ++j;
      } else {
        c = target[i].first;
        v = a * target[i].second - b * pivot[j].second;
        ++i;
        ++j;
      }
      if (sgn(v) != 0) {
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        out.emplace_back(c, std::move(v));
      }
    }
    if (content > 1) {
      for (auto& e : out) mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), content.get_mpz_t());
    }
    return out;
  }
};

struct ModularRowOps {
  using value_type = std::uint64_t;
  std::uint64_t p;

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
  }
  std::uint64_t inv(std::uint64_t a) const {
    std::uint64_t r = 1, e = p - 2;
    for (; e; e >>= 1, a = mul(a, a)) {
      if (e & 1) r = mul(r, a);
    }
    return r;
  }

  bool is_zero(std::uint64_t v) const { return v == 0; }

  SparseRow<std::uint64_t> eliminate(const SparseRow<std::uint64_t>& target, std::uint64_t t_pc,
                                     const SparseRow<std::uint64_t>& pivot, std::uint64_t p_pc) const {
    const std::uint64_t f = mul(t_pc, inv(p_pc));
    SparseRow<std::uint64_t> out;
    out.reserve(target.size() + pivot.size());
    std::size_t i = 0, j = 0;
    while (i < target.size() || j < pivot.size()) {
      std::uint64_t v;
      std::uint32_t c;
      if (j == pivot.size() || (i < target.size() && target[i].first < pivot[j].first)) {
        c = target[i].first;
        v = target[i].second;
        ++i;
      } else if (i == target.size() || pivot[j].first < target[i].first) {
        c = pivot[j].first;
        v = (p - mul(f, pivot[j].second)) % p;
        ++j;
      } else {
        c = target[i].first;
        v = (target[i].second + p - mul(f, pivot[j].second)) % p;
        ++i;
        ++j;
      }
      if (v != 0) out.emplace_back(c, v);
    }
    return out;
  }
};

// Right-looking sparse elimination with Markowitz pivot choice: minimize
// (row length - 1) * (column count - 1); ties go to the lowest row, then the
// lowest column.
template <typename Ops>
std::size_t markowitz_rank(std::vector<SparseRow<typename Ops::value_type>> rows, std::size_t ncols,
                           const Ops& ops) {
  using Row = SparseRow<typename Ops::value_type>;
  const std::size_t nrows = rows.size();
  std::vector<std::size_t> col_count(ncols, 0);
  std::vector<std::vector<std::uint32_t>> col_rows(ncols);
  std::vector<char> active(nrows, 0);
  std::size_t fill = 0;
  for (std::size_t r = 0; r < nrows; ++r) {
    if (rows[r].empty()) continue;
    active[r] = 1;
    fill += rows[r].size();
    for (const auto& [c, v] : rows[r]) {
      ++col_count[c];
      col_rows[c].push_back(static_cast<std::uint32_t>(r));
    }
  }

  auto find_col = [](const Row& row, std::uint32_t c) {
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& e, std::uint32_t col) { return e.first < col; });
    return (it != row.end() && it->first == c) ? it : row.end();
  };

  std::size_t rank = 0;
  while (true) {
    std::size_t best_cost = std::numeric_limits<std::size_t>::max();
    std::size_t pr = nrows;
    std::uint32_t pc = 0;
    for (std::size_t r = 0; r < nrows && best_cost > 0; ++r) {
      if (!active[r]) continue;
      const std::size_t len = rows[r].size() - 1;
      for (const auto& [c, v] : rows[r]) {
        const std::size_t cost = len * (col_count[c] - 1);
        if (cost < best_cost) {
          best_cost = cost;
          pr = r;
          pc = c;
          if (cost == 0) break;
        }
      }
    }
    if (pr == nrows) break;

    const Row pivot = std::move(rows[pr]);
    const auto pv = find_col(pivot, pc)->second;
    rows[pr].clear();
    active[pr] = 0;
    fill -= pivot.size();
    for (const auto& [c, v] : pivot) --col_count[c];

    std::vector<std::uint32_t> targets;
    targets.swap(col_rows[pc]);
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    for (std::uint32_t r : targets) {
      if (!active[r]) continue;
      Row& row = rows[r];
      auto it = find_col(row, pc);
      if (it == row.end()) continue;
      Row next = ops.eliminate(row, it->second, pivot, pv);
      // Column bookkeeping: walk old and new supports together.
      std::size_t i = 0, j = 0;
      while (i < row.size() || j < next.size()) {
        if (j == next.size() || (i < row.size() && row[i].first < next[j].first)) {
          --col_count[row[i].first];
          ++i;
        } else if (i == row.size() || next[j].first < row[i].first) {
          ++col_count[next[j].first];
          col_rows[next[j].first].push_back(r);
          ++j;
        } else {
          ++i;
          ++j;
        }
      }
      fill = fill - row.size() + next.size();
      row = std::move(next);
      if (row.empty()) active[r] = 0;
    }
    if (fill > kMaxEliminationFill) throw ResourceError("sparse elimination fill exceeded limit");
    ++rank;
  }
  return rank;
}

// Fraction-free (Bareiss) echelon reduction; every division is exact.
inline std::size_t dense_bareiss_rank(std::vector<std::vector<BigInt>> a, std::size_t ncols) {
  const std::size_t nrows = a.size();
  BigInt prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < ncols && rank < nrows; ++c) {
    std::size_t p = rank;
    while (p < nrows && sgn(a[p][c]) == 0) ++p;
    if (p == nrows) continue;
    std::swap(a[p], a[rank]);
    const BigInt& piv = a[rank][c];
    for (std::size_t i = rank + 1; i < nrows; ++i) {
      for (std::size_t j = c + 1; j < ncols; ++j) {
        BigInt v = piv * a[i][j] - a[i][c] * a[rank][j];
        mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = piv;
    ++rank;
  }
  return rank;
}

inline std::size_t dense_modular_rank(std::vector<std::vector<std::uint64_t>> a, std::size_t ncols,
                                      const ModularRowOps& ops) {
  const std::size_t nrows = a.size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < ncols && rank < nrows; ++c) {
    std::size_t p = rank;
    while (p < nrows && a[p][c] == 0) ++p;
    if (p == nrows) continue;
    std::swap(a[p], a[rank]);
    const std::uint64_t inv = ops.inv(a[rank][c]);
    for (std::size_t i = rank + 1; i < nrows; ++i) {
      if (a[i][c] == 0) continue;
      const std::uint64_t f = ops.mul(a[i][c], inv);
      for (std::size_t j = c; j < ncols; ++j) {
        a[i][j] = (a[i][j] + ops.p - ops.mul(f, a[rank][j])) % ops.p;
      }
    }
    ++rank;
  }
  return rank;
}

inline bool use_dense(const SparseIntMatrix& m) {
  return m.rows() <= kDenseRankThreshold && m.cols() <= kDenseRankThreshold;
}

}  // namespace detail

// Rank over the rationals.
inline std::size_t rank_exact(const SparseIntMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0 || m.is_zero()) return 0;
  if (detail::use_dense(m)) {
    std::vector<std::vector<BigInt>> a(m.rows(), std::vector<BigInt>(m.cols(), 0));
    for (std::size_t j = 0; j < m.cols(); ++j) {
      for (const auto& e : m.column(j)) a[e.row][j] = e.value;
    }
    return detail::dense_bareiss_rank(std::move(a), m.cols());
  }
  std::vector<detail::SparseRow<BigInt>> rows(m.rows());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    for (const auto& e : m.column(j)) rows[e.row].emplace_back(static_cast<std::uint32_t>(j), e.value);
  }
  return detail::markowitz_rank(std::move(rows), m.cols(), detail::IntegerRowOps{});
}

// Rank of the matrix reduced modulo the prime p; never exceeds rank_exact.
inline std::size_t rank_mod_p(const SparseIntMatrix& m, std::uint64_t p) {
  if (!is_prime(p)) throw ParameterError("modulus " + std::to_string(p) + " is not prime");
  if (m.rows() == 0 || m.cols() == 0) return 0;
  const detail::ModularRowOps ops{p};
  auto reduce = [p](const BigInt& v) {
    BigInt r;
    mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
    return static_cast<std::uint64_t>(r.get_ui());
  };
  if (detail::use_dense(m)) {
    std::vector<std::vector<std::uint64_t>> a(m.rows(), std::vector<std::uint64_t>(m.cols(), 0));
    for (std::size_t j = 0; j < m.cols(); ++j) {
      for (const auto& e : m.column(j)) a[e.row][j] = reduce(e.value);
    }
    return detail::dense_modular_rank(std::move(a), m.cols(), ops);
  }
  std::vector<detail::SparseRow<std::uint64_t>> rows(m.rows());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    for (const auto& e : m.column(j)) {
      if (auto v = reduce(e.value); v != 0) rows[e.row].emplace_back(static_cast<std::uint32_t>(j), v);
    }
  }
  return detail::markowitz_rank(std::move(rows), m.cols(), ops);
}

// How a homology computation obtains ranks.
enum class RankMethod {
  exact,      // fraction-free elimination only
  certified,  // modular first, confirmed by exact elimination
  modular,    // modular only; a lower bound on the true rank
};

// Default word-sized prime for the modular path (2^61 - 1).
inline constexpr std::uint64_t kDefaultPrime = (std::uint64_t{1} << 61) - 1;

struct RankResult {
  std::size_t rank = 0;
  std::size_t modular_rank = 0;   // when computed
  bool modular_mismatch = false;  // modular rank fell short of the exact one
};

inline RankResult compute_rank(const SparseIntMatrix& m, RankMethod method, std::uint64_t prime = kDefaultPrime) {
  RankResult r;
  switch (method) {
    case RankMethod::exact:
      r.rank = rank_exact(m);
      break;
    case RankMethod::modular:
      r.modular_rank = r.rank = rank_mod_p(m, prime);
      break;
    case RankMethod::certified:
      r.modular_rank = rank_mod_p(m, prime);
      r.rank = rank_exact(m);
      r.modular_mismatch = r.modular_rank != r.rank;
      break;
  }
  return r;
}

}  // namespace hypercyc
