#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "errors.hpp"
#include "hypergraph.hpp"
#include "sparse_matrix.hpp"

namespace hypercyc {

// Dense integer polynomial c_0 + c_1 x + ... + c_d x^d with c_d != 0 (the
// zero polynomial has no coefficients).
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

  static IntPolynomial monomial(int degree, BigInt coeff = 1) {
    std::vector<BigInt> c(degree + 1, 0);
    c[degree] = std::move(coeff);
    return IntPolynomial(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<BigInt>& coeffs() const { return c_; }
  BigInt coeff(int i) const { return (i >= 0 && i <= degree()) ? c_[i] : BigInt(0); }

  BigInt evaluate(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  IntPolynomial operator-(const IntPolynomial& o) const {
    std::vector<BigInt> c(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) c[i] -= o.c_[i];
    return IntPolynomial(std::move(c));
  }

  // Multiply by (x - a).
  IntPolynomial times_linear(const BigInt& a) const {
    if (c_.empty()) return *this;
    std::vector<BigInt> c(c_.size() + 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
      c[i + 1] += c_[i];
      c[i] -= a * c_[i];
    }
    return IntPolynomial(std::move(c));
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["coeffs"] = nlohmann::ordered_json::array();
    for (const auto& v : c_) {
      if (v.fits_slong_p()) {
        j["coeffs"].push_back(static_cast<std::int64_t>(v.get_si()));
      } else {
        j["coeffs"].push_back(v.get_str());
      }
    }
    return j;
  }

  // "x^3 - x"
  std::string to_string(const std::string& var = "x") const {
    if (c_.empty()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
      const BigInt& v = c_[i];
      if (sgn(v) == 0) continue;
      BigInt mag = abs(v);
      if (s.empty()) {
        if (sgn(v) < 0) s += "-";
      } else {
        s += sgn(v) < 0 ? " - " : " + ";
      }
      if (mag != 1 || i == 0) s += mag.get_str();
      if (i >= 1) s += var;
      if (i >= 2) s += "^" + std::to_string(i);
    }
    return s;
  }

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
  }
  std::vector<BigInt> c_;
};

inline BigInt evaluate(const IntPolynomial& p, const BigInt& x) { return p.evaluate(x); }

// |c_m| = |p^{(m)}(0)| / m!
inline BigInt scaled_derivative_at_zero(const IntPolynomial& p, int m) {
  if (m < 0 || m > p.degree()) throw ParameterError("derivative order out of range");
  return abs(p.coeff(m));
}

// Largest lambda^n allowed for exhaustive coloring.
inline constexpr std::uint64_t kMaxBruteColorings = 200'000'000;

// Number of maps {1..n} -> {1..lambda} leaving no edge monochromatic.
inline std::uint64_t chromatic_brute(const Hypergraph& h, int lambda) {
  if (lambda < 0) throw ParameterError("negative color count");
  const int n = h.n();
  if (n == 0) return 1;
  if (lambda == 0) return 0;
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    total *= static_cast<std::uint64_t>(lambda);
    if (total > kMaxBruteColorings) throw ResourceError("too many colorings to enumerate");
  }
  std::vector<int> color(n, 0);
  std::vector<VertexSet::mask_type> classes(lambda, 0);
  classes[0] = VertexSet::full(n).bits();
  std::uint64_t good = 0;
  for (std::uint64_t step = 0; step < total; ++step) {
    bool ok = true;
    for (VertexSet e : h.edges()) {
      const auto cls = classes[color[e.min() - 1]];
      if ((e.bits() & ~cls) == 0) {
        ok = false;
        break;
      }
    }
    if (ok) ++good;
    // odometer increment
    for (int v = 0; v < n; ++v) {
      classes[color[v]] &= ~(VertexSet::mask_type{1} << v);
      color[v] = (color[v] + 1) % lambda;
      classes[color[v]] |= VertexSet::mask_type{1} << v;
      if (color[v] != 0) break;
    }
  }
  return good;
}

// The unique polynomial of degree <= values.size()-1 through (i, values[i]),
// via forward differences in the falling-factorial basis.
inline IntPolynomial interpolate_from_zero(const std::vector<BigInt>& values) {
  std::vector<BigInt> diff = values;
  std::vector<BigInt> falling;  // coefficient of x(x-1)...(x-k+1)
  BigInt kfact = 1;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k > 0) kfact *= static_cast<unsigned long>(k);
    if (!mpz_divisible_p(diff[0].get_mpz_t(), kfact.get_mpz_t())) {
      throw std::logic_error("values are not those of an integer polynomial");
    }
    falling.push_back(diff[0] / kfact);
    for (std::size_t i = 0; i + 1 < diff.size(); ++i) diff[i] = diff[i + 1] - diff[i];
    diff.pop_back();
  }
  IntPolynomial result;
  IntPolynomial basis = IntPolynomial::monomial(0);
  for (std::size_t k = 0; k < falling.size(); ++k) {
    std::vector<BigInt> c(basis.coeffs());
    for (auto& v : c) v *= falling[k];
    IntPolynomial term(std::move(c));
    std::vector<BigInt> sum(std::max(result.coeffs().size(), term.coeffs().size()), 0);
    for (std::size_t i = 0; i < result.coeffs().size(); ++i) sum[i] += result.coeffs()[i];
    for (std::size_t i = 0; i < term.coeffs().size(); ++i) sum[i] += term.coeffs()[i];
    result = IntPolynomial(std::move(sum));
    basis = basis.times_linear(BigInt(static_cast<long>(k)));
  }
  return result;
}

// Exhaustive counts at lambda = 0..n, interpolated.
inline IntPolynomial chromatic_by_interpolation(const Hypergraph& h) {
  std::vector<BigInt> values;
  for (int lambda = 0; lambda <= h.n(); ++lambda) values.emplace_back(static_cast<unsigned long>(chromatic_brute(h, lambda)));
  return interpolate_from_zero(values);
}

// Edge counts up to this use inclusion-exclusion over edge subsets.
inline constexpr std::size_t kMaxInclusionExclusionEdges = 22;

namespace detail {

struct Components {
  std::array<std::uint8_t, kMaxVertices> parent{};
  int count = 0;

  explicit Components(int n) : count(n) {
    for (int i = 0; i < n; ++i) parent[i] = static_cast<std::uint8_t>(i);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void merge_edge(VertexSet e) {
    const int root = find(e.min() - 1);
    for (int v : e.elements()) {
      const int r = find(v - 1);
      if (r != root) {
        parent[r] = static_cast<std::uint8_t>(root);
        --count;
      }
    }
  }
};

inline void inclusion_exclusion(const std::vector<VertexSet>& edges, std::size_t i, Components comps, bool odd,
                                std::vector<std::int64_t>& coeff) {
  if (i == edges.size()) {
    coeff[comps.count] += odd ? -1 : 1;
    return;
  }
  inclusion_exclusion(edges, i + 1, comps, odd, coeff);
  comps.merge_edge(edges[i]);
  inclusion_exclusion(edges, i + 1, comps, !odd, coeff);
}

}  // namespace detail

// chi_H(lambda) = sum over edge subsets S of (-1)^|S| lambda^{c(S)}, where c(S)
// counts components after merging every edge of S. Falls back to brute force
// plus interpolation when the edge set is too large to enumerate.
inline IntPolynomial chromatic_hypergraph(const Hypergraph& h) {
  if (h.has_loop()) throw DefinitionError("chromatic polynomial undefined: hypergraph has a loop");
  if (h.edge_count() > kMaxInclusionExclusionEdges) return chromatic_by_interpolation(h);
  std::vector<std::int64_t> coeff(h.n() + 1, 0);
  detail::inclusion_exclusion(h.edges(), 0, detail::Components(h.n()), false, coeff);
  std::vector<BigInt> c;
  for (auto v : coeff) c.emplace_back(static_cast<long>(v));
  return IntPolynomial(std::move(c));
}

namespace detail {

// Simple graph on vertices 0..n-1 as an edge list of (u, v), u < v.
inline IntPolynomial deletion_contraction(int n, std::vector<std::pair<int, int>> edges) {
  if (edges.empty()) return IntPolynomial::monomial(n);
  const auto [u, v] = edges.back();
  edges.pop_back();
  const IntPolynomial deleted = deletion_contraction(n, edges);
  // Contract v into u; vertices above v shift down by one.
  auto relabel = [u = u, v = v](int x) {
    if (x == v) x = u;
    return x > v ? x - 1 : x;
  };
  std::vector<std::pair<int, int>> contracted;
  for (auto [a, b] : edges) {
    int x = relabel(a), y = relabel(b);
    if (x == y) return deleted;  // cannot happen for simple graphs: (u,v) was removed
    if (x > y) std::swap(x, y);
    if (std::find(contracted.begin(), contracted.end(), std::make_pair(x, y)) == contracted.end()) {
      contracted.emplace_back(x, y);
    }
  }
  return deleted - deletion_contraction(n - 1, std::move(contracted));
}

}  // namespace detail

// chi_G = chi_{G-e} - chi_{G/e}.
inline IntPolynomial chromatic_deletion_contraction(const Graph& g) {
  std::vector<std::pair<int, int>> edges;
  for (VertexSet e : g.edges()) edges.emplace_back(e.min() - 1, e.max() - 1);
  return detail::deletion_contraction(g.n(), std::move(edges));
}

}  // namespace hypercyc
