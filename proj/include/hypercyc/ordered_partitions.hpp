#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "errors.hpp"
#include "hypergraph.hpp"
#include "vertex_set.hpp"

namespace hypercyc {

// A sequence of nonempty, pairwise disjoint blocks covering {1..n}. A
// partition with m blocks sits in degree m-2.
class OrderedSetPartition {
 public:
  OrderedSetPartition() = default;
  OrderedSetPartition(int n, std::vector<VertexSet> blocks) : n_(n), blocks_(std::move(blocks)) {}

  // Throws ParameterError unless the blocks form an ordered partition of {1..n}.
  static OrderedSetPartition checked(int n, std::vector<VertexSet> blocks) {
    if (n < 1 || n > kMaxVertices) throw ParameterError("vertex count out of range");
    if (blocks.empty()) throw ParameterError("partition needs at least one block");
    VertexSet seen;
    for (VertexSet b : blocks) {
      if (b.empty()) throw ParameterError("empty block");
      if (seen.intersects(b)) throw ParameterError("blocks are not disjoint");
      seen = seen | b;
    }
    if (seen != VertexSet::full(n)) throw ParameterError("blocks do not cover 1..n");
    return OrderedSetPartition(n, std::move(blocks));
  }

  int n() const { return n_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  int degree() const { return block_count() - 2; }
  const std::vector<VertexSet>& blocks() const { return blocks_; }
  VertexSet block(int i) const { return blocks_[i]; }

  // Position of every vertex packed four bits apiece. Injective on ordered
  // partitions of a fixed {1..n}.
  std::uint64_t key() const {
    std::uint64_t k = 0;
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
      for (auto bits = blocks_[i].bits(); bits != 0; bits &= bits - 1) {
        k |= static_cast<std::uint64_t>(i) << (4 * std::countr_zero(bits));
      }
    }
    return k;
  }

  // Rotate left by t: (B_1..B_m) -> (B_{t+1}..B_m, B_1..B_t).
  OrderedSetPartition rotated(int t) const {
    std::vector<VertexSet> b = blocks_;
    if (!b.empty()) std::rotate(b.begin(), b.begin() + (t % static_cast<int>(b.size())), b.end());
    return OrderedSetPartition(n_, std::move(b));
  }

  // Adjacent merge of blocks i and i+1 (0-based).
  OrderedSetPartition merged(int i) const {
    std::vector<VertexSet> b;
    b.reserve(blocks_.size() - 1);
    for (int j = 0; j < block_count(); ++j) {
      if (j == i + 1) continue;
      b.push_back(j == i ? (blocks_[i] | blocks_[i + 1]) : blocks_[j]);
    }
    return OrderedSetPartition(n_, std::move(b));
  }

  // [B_1 ∪ B_m, B_2, ..., B_{m-1}]
  OrderedSetPartition wrap_merged() const {
    std::vector<VertexSet> b(blocks_.begin(), blocks_.end() - 1);
    b.front() = b.front() | blocks_.back();
    return OrderedSetPartition(n_, std::move(b));
  }

  // "1,3|2|4"
  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
      if (i) s += '|';
      s += blocks_[i].to_string();
    }
    return s;
  }

  static OrderedSetPartition parse(int n, std::string_view text) {
    std::vector<VertexSet> blocks;
    std::size_t start = 0;
    while (start <= text.size()) {
      const std::size_t bar = std::min(text.find('|', start), text.size());
      std::string_view part = text.substr(start, bar - start);
      std::vector<int> elems;
      std::size_t p = 0;
      while (p <= part.size()) {
        const std::size_t comma = std::min(part.find(',', p), part.size());
        const std::string tok(part.substr(p, comma - p));
        if (tok.empty()) throw ParameterError("malformed partition text \"" + std::string(text) + "\"");
        std::size_t used = 0;
        int v = 0;
        try {
          v = std::stoi(tok, &used);
        } catch (const std::exception&) {
          throw ParameterError("malformed partition text \"" + std::string(text) + "\"");
        }
        if (used != tok.size()) throw ParameterError("malformed partition text \"" + std::string(text) + "\"");
        if (v < 1 || v > n) throw ParameterError("vertex out of range in \"" + std::string(text) + "\"");
        elems.push_back(v);
        p = comma + 1;
      }
      VertexSet b = VertexSet::of(elems);
      if (static_cast<std::size_t>(b.size()) != elems.size()) throw ParameterError("repeated vertex in block");
      blocks.push_back(b);
      start = bar + 1;
    }
    return checked(n, std::move(blocks));
  }

  friend bool operator==(const OrderedSetPartition&, const OrderedSetPartition&) = default;

 private:
  int n_ = 0;
  std::vector<VertexSet> blocks_;
};

// ---------------------------------------------------------------------------
// Enumeration
//
// Order: unordered set partitions in restricted-growth-string order (block
// labels by first appearance, so label 0 holds vertex 1), then arrangements of
// the labels in lexicographic permutation order.

namespace detail {

// Calls fn(blocks) for every set partition of {1..n} into exactly m blocks,
// blocks listed by their smallest element.
template <typename Fn>
void for_each_set_partition(int n, int m, Fn&& fn) {
  if (m < 1 || m > n) return;
  std::vector<int> rgs(n, 0);
  std::vector<int> prefix_max(n, 0);
  std::vector<VertexSet> blocks(m);
  // Recursive over positions; depth is n <= 16.
  std::function<void(int, int)> rec = [&](int pos, int used) {
    if (n - pos < m - used) return;  // not enough vertices left to open the remaining blocks
    if (pos == n) {
      if (used != m) return;
      for (auto& b : blocks) b = VertexSet();
      for (int v = 0; v < n; ++v) blocks[rgs[v]].insert(v + 1);
      fn(static_cast<const std::vector<VertexSet>&>(blocks));
      return;
    }
    const int limit = std::min(used, m - 1);
    for (int label = 0; label <= limit; ++label) {
      rgs[pos] = label;
      rec(pos + 1, label == used ? used + 1 : used);
    }
  };
  rgs[0] = 0;
  rec(1, 1);
}

}  // namespace detail

template <typename Fn>
void for_each_ordered_partition(int n, int m, Fn&& fn) {
  if (n > kMaxVertices) throw ResourceError("vertex count exceeds enumeration limit");
  detail::for_each_set_partition(n, m, [&](const std::vector<VertexSet>& blocks) {
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<VertexSet> ordered(m);
      for (int i = 0; i < m; ++i) ordered[i] = blocks[perm[i]];
      fn(OrderedSetPartition(n, std::move(ordered)));
    } while (std::next_permutation(perm.begin(), perm.end()));
  });
}

inline std::vector<OrderedSetPartition> enumerate_ordered_partitions(int n, int m) {
  std::vector<OrderedSetPartition> out;
  for_each_ordered_partition(n, m, [&](OrderedSetPartition p) { out.push_back(std::move(p)); });
  return out;
}

// Canonical representatives (vertex 1 in the first block) of the cyclic
// classes with m blocks.
template <typename Fn>
void for_each_cyclic_representative(int n, int m, Fn&& fn) {
  if (n > kMaxVertices) throw ResourceError("vertex count exceeds enumeration limit");
  detail::for_each_set_partition(n, m, [&](const std::vector<VertexSet>& blocks) {
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<VertexSet> ordered(m);
      for (int i = 0; i < m; ++i) ordered[i] = blocks[perm[i]];
      fn(OrderedSetPartition(n, std::move(ordered)));
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
  });
}

// ---------------------------------------------------------------------------
// Signed cyclic identification: (B_1..B_m) ~ (-1)^{m-1} (B_2..B_m, B_1).

struct CyclicClass {
  OrderedSetPartition canonical;  // 1 ∈ first block
  int sign = 1;                   // p = sign * canonical in the quotient
};

inline int rotation_sign(int block_count, int steps) {
  // Each left rotation contributes (-1)^{r+1} = (-1)^{m-1}.
  return ((block_count - 1) % 2 != 0 && steps % 2 != 0) ? -1 : 1;
}

inline CyclicClass canonicalize(const OrderedSetPartition& p) {
  int t = 0;
  while (!p.block(t).contains(1)) ++t;
  return CyclicClass{p.rotated(t), rotation_sign(p.block_count(), t)};
}

// A dense, ordered face list with key -> index lookup.
class FaceBasis {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  void push_back(OrderedSetPartition p) {
    index_.emplace(p.key(), faces_.size());
    faces_.push_back(std::move(p));
  }
  std::size_t size() const { return faces_.size(); }
  bool empty() const { return faces_.empty(); }
  const OrderedSetPartition& operator[](std::size_t i) const { return faces_[i]; }
  const std::vector<OrderedSetPartition>& faces() const { return faces_; }

  std::size_t find(const OrderedSetPartition& p) const {
    auto it = index_.find(p.key());
    return it == index_.end() ? npos : it->second;
  }

 private:
  std::vector<OrderedSetPartition> faces_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
};

inline FaceBasis enumerate_cyclic_classes(int n, int m) {
  FaceBasis b;
  for_each_cyclic_representative(n, m, [&](OrderedSetPartition p) { b.push_back(std::move(p)); });
  return b;
}

// Per block: does it contain an edge of h.
inline std::vector<bool> blocks_containing_edge(const OrderedSetPartition& p, const Hypergraph& h) {
  if (p.n() != h.n()) throw ParameterError("partition and hypergraph have different vertex sets");
  std::vector<bool> out;
  out.reserve(p.block_count());
  for (VertexSet b : p.blocks()) out.push_back(h.block_contains_edge(b));
  return out;
}

inline bool block_contains_edge(const OrderedSetPartition& p, const Hypergraph& h) {
  if (p.n() != h.n()) throw ParameterError("partition and hypergraph have different vertex sets");
  return std::any_of(p.blocks().begin(), p.blocks().end(),
                     [&h](VertexSet b) { return h.block_contains_edge(b); });
}

}  // namespace hypercyc
