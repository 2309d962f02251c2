#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include <json.hpp>

#include "chain_complex.hpp"
#include "parallel.hpp"
#include "rank.hpp"

namespace hypercyc {

struct DegreeHomology {
  int r = 0;
  std::size_t basis = 0;
  std::size_t rank_down = 0;  // rank of boundary(r)
  std::size_t rank_up = 0;    // rank of boundary(r+1)
  std::int64_t h = 0;
};

struct HomologyReport {
  nlohmann::ordered_json complex;
  std::vector<DegreeHomology> degrees;
  std::int64_t euler_faces = 0;     // sum (-1)^r |basis_r|
  std::int64_t euler_homology = 0;  // sum (-1)^r h_r
  std::size_t modular_mismatches = 0;

  // h_r, zero outside the recorded range.
  std::int64_t h(int r) const {
    for (const auto& d : degrees) {
      if (d.r == r) return d.h;
    }
    return 0;
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["complex"] = complex;
    j["degrees"] = nlohmann::ordered_json::array();
    for (const auto& d : degrees) {
      nlohmann::ordered_json e;
      e["r"] = d.r;
      e["basis"] = d.basis;
      e["rank_down"] = d.rank_down;
      e["rank_up"] = d.rank_up;
      e["h"] = d.h;
      j["degrees"].push_back(std::move(e));
    }
    j["euler"] = euler_homology;
    return j;
  }
};

struct HomologyOptions {
  RankMethod method = RankMethod::exact;
  std::uint64_t prime = kDefaultPrime;
  unsigned jobs = 1;
};

inline int alternating(int r) { return (r % 2 == 0) ? 1 : -1; }

// h_r = |basis_r| - rank boundary(r) - rank boundary(r+1).
inline HomologyReport homology_dims(const ChainComplex& c, const HomologyOptions& opt = {}) {
  const int lo = c.min_degree();
  const int hi = c.max_degree();
  const std::size_t count = static_cast<std::size_t>(hi - lo + 1);
  std::vector<RankResult> ranks(count);
  parallel_for(count, opt.jobs, [&](std::size_t i) {
    ranks[i] = compute_rank(c.boundary(lo + static_cast<int>(i)), opt.method, opt.prime);
  });

  HomologyReport rep;
  rep.complex = c.spec().descriptor();
  for (int r = lo; r <= hi; ++r) {
    DegreeHomology d;
    d.r = r;
    d.basis = c.basis(r).size();
    d.rank_down = ranks[r - lo].rank;
    d.rank_up = r < hi ? ranks[r - lo + 1].rank : 0;
    d.h = static_cast<std::int64_t>(d.basis) - static_cast<std::int64_t>(d.rank_down) -
          static_cast<std::int64_t>(d.rank_up);
    rep.euler_faces += alternating(r) * static_cast<std::int64_t>(d.basis);
    rep.euler_homology += alternating(r) * d.h;
    rep.degrees.push_back(d);
  }
  for (const auto& rr : ranks) rep.modular_mismatches += rr.modular_mismatch ? 1 : 0;
  return rep;
}

// A formal integer combination of basis faces in one degree.
struct Chain {
  int degree = 0;
  std::map<std::size_t, BigInt> terms;  // basis index -> coefficient, no zeros

  bool is_zero() const { return terms.empty(); }

  void add(std::size_t index, const BigInt& coeff) {
    auto& v = terms[index];
    v += coeff;
    if (sgn(v) == 0) terms.erase(index);
  }

  SparseIntMatrix::Column as_column() const {
    SparseIntMatrix::Column col;
    for (const auto& [i, v] : terms) col.push_back({i, v});
    return col;
  }
};

// sum over permutations s of the complement {a_1 < ... < a_{r+1}} of A in
// {2..n} of sgn(s) [A ∪ {1}, a_s(1), ..., a_s(r+1)], with r = n - |A| - 2.
inline Chain representative_cycle(const ChainComplex& c, VertexSet a) {
  const int n = c.spec().n();
  if (!c.spec().cyclic()) throw ParameterError("representative cycles live in cyclic complexes");
  if (a.contains(1)) throw ParameterError("representative index set must not contain vertex 1");
  if (!VertexSet::full(n).contains(a)) throw ParameterError("representative index set not within 2..n");
  const int r = n - a.size() - 2;
  if (!c.has_degree(r)) throw ParameterError("representative index set has the wrong size");

  const VertexSet first = a | VertexSet::of({1});
  std::vector<int> rest = (VertexSet::full(n) - first).elements();
  Chain chain;
  chain.degree = r;
  std::vector<int> perm(rest.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
      for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j] ? 1 : 0;
    }
    std::vector<VertexSet> blocks{first};
    for (int i : perm) blocks.push_back(VertexSet::of({rest[i]}));
    const OrderedSetPartition p(n, std::move(blocks));
    const std::size_t idx = c.basis(r).find(p);
    if (idx == FaceBasis::npos) {
      throw ParameterError("representative term " + p.to_string() + " is not a face of the complex");
    }
    chain.add(idx, BigInt(inversions % 2 == 0 ? 1 : -1));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return chain;
}

// The matrix of boundary(r+1), or an empty-column matrix on top degree.
inline SparseIntMatrix boundary_into(const ChainComplex& c, int r) {
  if (r + 1 <= c.max_degree()) return c.boundary(r + 1);
  return SparseIntMatrix(c.basis(r).size(), 0);
}

struct CycleCheck {
  bool is_cycle = false;
  bool is_nontrivial = false;
};

inline CycleCheck verify_cycle(const ChainComplex& c, const Chain& chain, int degree) {
  if (!c.has_degree(degree)) throw ParameterError("degree out of range");
  for (const auto& [i, v] : chain.terms) {
    if (i >= c.basis(degree).size()) throw ParameterError("chain index out of range");
  }
  CycleCheck out;
  SparseIntMatrix col(c.basis(degree).size(), 0);
  col.append_column(chain.as_column());
  out.is_cycle = c.boundary(degree).multiply(col).is_zero();

  SparseIntMatrix up = boundary_into(c, degree);
  const std::size_t base = rank_exact(up);
  up.append_column(chain.as_column());
  out.is_nontrivial = rank_exact(up) > base;
  return out;
}

// rank [boundary(r+1) | chains] - rank boundary(r+1): how many independent
// homology classes the chains contribute.
inline std::size_t rank_gain_modulo_boundaries(const ChainComplex& c, int degree, const std::vector<Chain>& chains) {
  SparseIntMatrix up = boundary_into(c, degree);
  const std::size_t base = rank_exact(up);
  for (const auto& ch : chains) up.append_column(ch.as_column());
  return rank_exact(up) - base;
}

// All representatives of degree r (one per (n-r-2)-subset of {2..n}).
inline std::vector<Chain> representative_cycles(const ChainComplex& c, int r) {
  const int n = c.spec().n();
  std::vector<Chain> out;
  for (VertexSet s : k_subsets(n - 1, n - r - 2)) out.push_back(representative_cycle(c, VertexSet(s.bits() << 1)));
  return out;
}

}  // namespace hypercyc
