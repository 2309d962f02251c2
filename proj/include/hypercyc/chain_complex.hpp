#pragma once

#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "errors.hpp"
#include "hypergraph.hpp"
#include "ordered_partitions.hpp"
#include "parallel.hpp"
#include "sparse_matrix.hpp"

namespace hypercyc {

enum class ComplexKind {
  lambda,            // ordered partitions with a block containing an edge
  delta,             // cyclic classes with a block containing an edge
  delta_complement,  // cyclic classes with no block containing an edge
  full_cyclic,       // every cyclic class (the looped hypergraph E_n)
  restricted,        // cyclic classes avoiding forbidden sets, optionally keeping one set together
};

inline std::string to_string(ComplexKind k) {
  switch (k) {
    case ComplexKind::lambda: return "lambda";
    case ComplexKind::delta: return "delta";
    case ComplexKind::delta_complement: return "delta-complement";
    case ComplexKind::full_cyclic: return "full-cyclic";
    case ComplexKind::restricted: return "restricted";
  }
  return "?";
}

inline ComplexKind complex_kind_from_string(const std::string& s) {
  for (auto k : {ComplexKind::lambda, ComplexKind::delta, ComplexKind::delta_complement, ComplexKind::full_cyclic,
                 ComplexKind::restricted}) {
    if (to_string(k) == s) return k;
  }
  throw ParameterError("unknown complex kind \"" + s + "\"");
}

class ComplexSpec {
 public:
  static ComplexSpec lambda(Hypergraph h) { return ComplexSpec(ComplexKind::lambda, std::move(h)); }
  static ComplexSpec delta(Hypergraph h) { return ComplexSpec(ComplexKind::delta, std::move(h)); }
  static ComplexSpec delta_complement(Hypergraph h) {
    return ComplexSpec(ComplexKind::delta_complement, std::move(h));
  }
  static ComplexSpec full_cyclic(int n) {
    ComplexSpec s(ComplexKind::full_cyclic, make_edgeless(n));
    return s;
  }
  static ComplexSpec restricted(int n, std::vector<VertexSet> forbidden, std::optional<VertexSet> required = {}) {
    ComplexSpec s(ComplexKind::restricted, make_edgeless(n));
    const VertexSet all = VertexSet::full(n);
    for (VertexSet f : forbidden) {
      if (f.empty() || !all.contains(f)) throw ParameterError("forbidden set must be a nonempty subset of 1..n");
    }
    if (required) {
      if (required->empty() || !all.contains(*required)) {
        throw ParameterError("required set must be a nonempty subset of 1..n");
      }
      if (std::find(forbidden.begin(), forbidden.end(), *required) != forbidden.end()) {
        throw ParameterError("required set is also forbidden");
      }
    }
    s.forbidden_ = std::move(forbidden);
    s.required_ = required;
    return s;
  }

  ComplexKind kind() const { return kind_; }
  int n() const { return h_.n(); }
  bool cyclic() const { return kind_ != ComplexKind::lambda; }
  const Hypergraph& hypergraph() const { return h_; }
  const std::vector<VertexSet>& forbidden() const { return forbidden_; }
  const std::optional<VertexSet>& required() const { return required_; }

  // Whether p is a face of this complex.
  bool admits(const OrderedSetPartition& p) const {
    switch (kind_) {
      case ComplexKind::lambda:
      case ComplexKind::delta:
        return block_contains_edge(p, h_);
      case ComplexKind::delta_complement:
        return !block_contains_edge(p, h_);
      case ComplexKind::full_cyclic:
        return true;
      case ComplexKind::restricted: {
        bool has_required = !required_;
        for (VertexSet b : p.blocks()) {
          for (VertexSet f : forbidden_) {
            if (b.contains(f)) return false;
          }
          if (required_ && b.contains(*required_)) has_required = true;
        }
        return has_required;
      }
    }
    return false;
  }

  nlohmann::ordered_json descriptor() const {
    nlohmann::ordered_json j;
    j["kind"] = to_string(kind_);
    j["n"] = n();
    if (kind_ == ComplexKind::lambda || kind_ == ComplexKind::delta || kind_ == ComplexKind::delta_complement) {
      j["hypergraph"] = to_json(h_);
    }
    if (kind_ == ComplexKind::restricted) {
      j["forbidden"] = nlohmann::ordered_json::array();
      for (VertexSet f : forbidden_) j["forbidden"].push_back(f.elements());
      j["required"] = required_ ? nlohmann::ordered_json(required_->elements()) : nlohmann::ordered_json(nullptr);
    }
    return j;
  }

 private:
  ComplexSpec(ComplexKind kind, Hypergraph h) : kind_(kind), h_(std::move(h)) {
    if (h_.n() < 1) throw ParameterError("complex needs at least one vertex");
  }

  ComplexKind kind_;
  Hypergraph h_;
  std::vector<VertexSet> forbidden_;
  std::optional<VertexSet> required_;
};

inline bool face_predicate(const ComplexSpec& spec, const OrderedSetPartition& p) { return spec.admits(p); }

// Graded bases for degrees -1..n-2 and the boundary matrices between them.
// boundary(r) maps degree r to degree r-1; boundary(-1) has no rows.
class ChainComplex {
 public:
  ChainComplex(ComplexSpec spec, std::vector<FaceBasis> bases, std::vector<SparseIntMatrix> boundaries)
      : spec_(std::move(spec)), bases_(std::move(bases)), boundaries_(std::move(boundaries)) {}

  const ComplexSpec& spec() const { return spec_; }
  int min_degree() const { return -1; }
  int max_degree() const { return spec_.n() - 2; }
  bool has_degree(int r) const { return r >= min_degree() && r <= max_degree(); }

  const FaceBasis& basis(int r) const { return bases_.at(slot(r)); }
  const SparseIntMatrix& boundary(int r) const { return boundaries_.at(slot(r)); }

  // Write per degree the basis in text form, then the boundary triplets
  // (1-based row col value, sorted).
  void dump(std::ostream& os) const {
    os << "complex " << spec_.descriptor().dump() << '\n';
    for (int r = min_degree(); r <= max_degree(); ++r) {
      const auto& b = basis(r);
      os << "degree " << r << " basis " << b.size() << '\n';
      for (const auto& f : b.faces()) os << f.to_string() << '\n';
      os << "boundary " << r << ' ';
      boundary(r).write_triplets(os);
    }
  }

 private:
  std::size_t slot(int r) const {
    if (!has_degree(r)) throw ParameterError("degree " + std::to_string(r) + " out of range");
    return static_cast<std::size_t>(r + 1);
  }

  ComplexSpec spec_;
  std::vector<FaceBasis> bases_;
  std::vector<SparseIntMatrix> boundaries_;
};

// Faces of the complex in degree r, in enumeration order.
inline FaceBasis build_basis(const ComplexSpec& spec, int r) {
  FaceBasis basis;
  auto take = [&](OrderedSetPartition p) {
    if (spec.admits(p)) basis.push_back(std::move(p));
  };
  if (spec.cyclic()) {
    for_each_cyclic_representative(spec.n(), r + 2, take);
  } else {
    for_each_ordered_partition(spec.n(), r + 2, take);
  }
  return basis;
}

// Boundary of one face as (target face, coefficient) terms before collision
// summing. Lambda: sum_i (-1)^i merge(i, i+1). Cyclic: sum_i (-1)^{i+1}
// merge(i, i+1) plus (-1)^{r+3} times the merge of the last block into the
// first, each canonicalized with its rotation sign.
inline std::vector<std::pair<OrderedSetPartition, int>> boundary_terms(const OrderedSetPartition& p, bool cyclic) {
  std::vector<std::pair<OrderedSetPartition, int>> terms;
  const int m = p.block_count();
  if (m < 2) return terms;
  for (int i = 1; i < m; ++i) {
    const int sign = ((cyclic ? i + 1 : i) % 2 == 0) ? 1 : -1;
    terms.emplace_back(p.merged(i - 1), sign);
  }
  if (cyclic) {
    const int r = m - 2;
    terms.emplace_back(p.wrap_merged(), (r + 3) % 2 == 0 ? 1 : -1);
    for (auto& [q, s] : terms) {
      CyclicClass c = canonicalize(q);
      q = std::move(c.canonical);
      s *= c.sign;
    }
  }
  return terms;
}

// Terms landing outside the complex are dropped, which realizes the quotient
// for complement and restricted kinds.
inline SparseIntMatrix build_boundary(const ComplexSpec& spec, const FaceBasis& source, const FaceBasis& target) {
  SparseIntMatrix m(target.size(), source.size());
  for (std::size_t j = 0; j < source.size(); ++j) {
    SparseIntMatrix::Column col;
    for (auto& [q, s] : boundary_terms(source[j], spec.cyclic())) {
      if (!spec.admits(q)) continue;
      const std::size_t i = target.find(q);
      if (i == FaceBasis::npos) throw std::logic_error("boundary term " + q.to_string() + " missing from basis");
      col.push_back({i, BigInt(s)});
    }
    m.set_column(j, std::move(col));
  }
  return m;
}

inline ChainComplex build_complex(const ComplexSpec& spec, unsigned jobs = 1) {
  const int n = spec.n();
  if (n > kMaxVertices) throw ResourceError("vertex count exceeds enumeration limit");
  const std::size_t degrees = static_cast<std::size_t>(n);  // -1..n-2
  std::vector<FaceBasis> bases(degrees);
  parallel_for(degrees, jobs, [&](std::size_t i) { bases[i] = build_basis(spec, static_cast<int>(i) - 1); });
  std::vector<SparseIntMatrix> boundaries(degrees);
  parallel_for(degrees, jobs, [&](std::size_t i) {
    if (i == 0) {
      boundaries[0] = SparseIntMatrix(0, bases[0].size());
    } else {
      boundaries[i] = build_boundary(spec, bases[i], bases[i - 1]);
    }
  });
  return ChainComplex(spec, std::move(bases), std::move(boundaries));
}

// Face counts per degree -1..n-2 without building boundaries.
inline std::vector<std::size_t> face_counts(const ComplexSpec& spec) {
  std::vector<std::size_t> out;
  for (int r = -1; r <= spec.n() - 2; ++r) out.push_back(build_basis(spec, r).size());
  return out;
}

struct DSquaredCheck {
  bool ok = true;
  int degree = 0;              // degree r of the first failing composite boundary(r-1)*boundary(r)
  std::string offending_face;  // basis element of degree r whose double boundary is nonzero
};

inline DSquaredCheck verify_d_squared(const ChainComplex& c) {
  for (int r = c.min_degree() + 1; r <= c.max_degree(); ++r) {
    const SparseIntMatrix prod = c.boundary(r - 1).multiply(c.boundary(r));
    for (std::size_t j = 0; j < prod.cols(); ++j) {
      if (!prod.column(j).empty()) return DSquaredCheck{false, r, c.basis(r)[j].to_string()};
    }
  }
  return DSquaredCheck{};
}

// The faces of the looped complex split between Δ(H) and its complement.
inline bool pair_additivity_check(const Hypergraph& h) {
  const auto all = face_counts(ComplexSpec::full_cyclic(h.n()));
  const auto sub = face_counts(ComplexSpec::delta(h));
  const auto quo = face_counts(ComplexSpec::delta_complement(h));
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (all[i] != sub[i] + quo[i]) return false;
  }
  return true;
}

}  // namespace hypercyc
