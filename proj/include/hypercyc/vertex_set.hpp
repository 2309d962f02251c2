#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"

namespace hypercyc {

// Hard ceiling on the vertex count. Vertex positions in a partition key are
// packed four bits each into a 64-bit word, so 16 is also the key limit.
inline constexpr int kMaxVertices = 16;

// A subset of {1..n} stored as a bitmask; vertex v lives in bit v-1.
class VertexSet {
 public:
  using mask_type = std::uint32_t;

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(mask_type bits) : bits_(bits) {}

  static VertexSet of(const std::vector<int>& vertices) {
    VertexSet s;
    for (int v : vertices) {
      if (v < 1 || v > kMaxVertices) {
        throw ParameterError("vertex " + std::to_string(v) + " out of range 1.." +
                             std::to_string(kMaxVertices));
      }
      s.insert(v);
    }
    return s;
  }

  // {1..n}
  static constexpr VertexSet full(int n) {
    return VertexSet(n >= 32 ? ~mask_type{0} : ((mask_type{1} << n) - 1));
  }

  constexpr mask_type bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int v) const { return (bits_ >> (v - 1)) & 1U; }
  constexpr bool contains(VertexSet other) const { return (other.bits_ & ~bits_) == 0; }
  constexpr bool intersects(VertexSet other) const { return (other.bits_ & bits_) != 0; }
  constexpr void insert(int v) { bits_ |= mask_type{1} << (v - 1); }
  constexpr void erase(int v) { bits_ &= ~(mask_type{1} << (v - 1)); }

  // Smallest vertex, 0 if empty.
  constexpr int min() const { return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1; }
  constexpr int max() const { return bits_ == 0 ? 0 : 32 - std::countl_zero(bits_); }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(size());
    for (mask_type b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
    return out;
  }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(VertexSet a, VertexSet b) = default;
  // Orders by sorted element list (lexicographic), which is how edges are listed.
  friend bool operator<(VertexSet a, VertexSet b) { return a.elements() < b.elements(); }

  // "1,3,4"
  std::string to_string() const {
    std::string s;
    for (int v : elements()) {
      if (!s.empty()) s += ',';
      s += std::to_string(v);
    }
    return s;
  }

 private:
  mask_type bits_ = 0;
};

// All size-k subsets of {1..n} in lexicographic order of their sorted elements.
inline std::vector<VertexSet> k_subsets(int n, int k) {
  std::vector<VertexSet> out;
  if (k < 0 || k > n) return out;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i + 1;
  while (true) {
    out.push_back(VertexSet::of(idx));
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i + 1) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

}  // namespace hypercyc
