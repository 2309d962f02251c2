#pragma once

#include <algorithm>
#include <cstddef>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "errors.hpp"

namespace hypercyc {

using BigInt = mpz_class;

struct Triplet {
  std::size_t row = 0;
  std::size_t col = 0;
  BigInt value;
};

// Column-compressed integer matrix. Each column is sorted by row index and
// holds no explicit zeros; duplicates are summed on construction.
class SparseIntMatrix {
 public:
  struct Entry {
    std::size_t row = 0;
    BigInt value;
  };
  using Column = std::vector<Entry>;

  SparseIntMatrix() = default;
  SparseIntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

  static SparseIntMatrix from_triplets(std::size_t rows, std::size_t cols, std::vector<Triplet> triplets) {
    SparseIntMatrix m(rows, cols);
    for (auto& t : triplets) {
      if (t.row >= rows || t.col >= cols) throw ParameterError("triplet index out of range");
      m.columns_[t.col].push_back(Entry{t.row, std::move(t.value)});
    }
    for (auto& c : m.columns_) normalize(c);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return columns_.size(); }
  const Column& column(std::size_t j) const { return columns_[j]; }

  std::size_t nnz() const {
    std::size_t n = 0;
    for (const auto& c : columns_) n += c.size();
    return n;
  }

  bool is_zero() const {
    return std::all_of(columns_.begin(), columns_.end(), [](const Column& c) { return c.empty(); });
  }

  // Entry lookup; zero when absent.
  BigInt at(std::size_t i, std::size_t j) const {
    const auto& c = columns_[j];
    auto it = std::lower_bound(c.begin(), c.end(), i, [](const Entry& e, std::size_t r) { return e.row < r; });
    return (it != c.end() && it->row == i) ? it->value : BigInt(0);
  }

  // Sets column j, summing duplicates and dropping zeros.
  void set_column(std::size_t j, Column c) {
    for (const auto& e : c) {
      if (e.row >= rows_) throw ParameterError("row index out of range");
    }
    normalize(c);
    columns_[j] = std::move(c);
  }

  void append_column(Column c) {
    columns_.emplace_back();
    set_column(columns_.size() - 1, std::move(c));
  }

  // Row-major triplets sorted by (row, col).
  std::vector<Triplet> triplets() const {
    std::vector<Triplet> out;
    out.reserve(nnz());
    for (std::size_t j = 0; j < columns_.size(); ++j) {
      for (const auto& e : columns_[j]) out.push_back(Triplet{e.row, j, e.value});
    }
    std::sort(out.begin(), out.end(),
              [](const Triplet& a, const Triplet& b) { return a.row != b.row ? a.row < b.row : a.col < b.col; });
    return out;
  }

  SparseIntMatrix transpose() const {
    std::vector<Triplet> t;
    for (std::size_t j = 0; j < columns_.size(); ++j) {
      for (const auto& e : columns_[j]) t.push_back(Triplet{j, e.row, e.value});
    }
    return from_triplets(cols(), rows(), std::move(t));
  }

  // this * rhs
  SparseIntMatrix multiply(const SparseIntMatrix& rhs) const {
    if (cols() != rhs.rows()) throw ParameterError("dimension mismatch in matrix product");
    SparseIntMatrix out(rows(), rhs.cols());
    for (std::size_t j = 0; j < rhs.cols(); ++j) {
      Column acc;
      for (const auto& e : rhs.columns_[j]) {
        for (const auto& f : columns_[e.row]) acc.push_back(Entry{f.row, f.value * e.value});
      }
      out.set_column(j, std::move(acc));
    }
    return out;
  }

  // Matrix Market-style text: "rows cols nnz" then 1-based "row col value".
  void write_triplets(std::ostream& os) const {
    os << rows_ << ' ' << cols() << ' ' << nnz() << '\n';
    for (const auto& t : triplets()) os << t.row + 1 << ' ' << t.col + 1 << ' ' << t.value << '\n';
  }

  static SparseIntMatrix read_triplets(std::istream& is) {
    std::size_t rows = 0, cols = 0, nnz = 0;
    if (!(is >> rows >> cols >> nnz)) throw ParameterError("malformed triplet header");
    std::vector<Triplet> t;
    t.reserve(nnz);
    for (std::size_t k = 0; k < nnz; ++k) {
      std::size_t i = 0, j = 0;
      std::string v;
      if (!(is >> i >> j >> v) || i == 0 || j == 0) throw ParameterError("malformed triplet line");
      BigInt value;
      if (value.set_str(v, 10) != 0) throw ParameterError("malformed triplet value \"" + v + "\"");
      t.push_back(Triplet{i - 1, j - 1, std::move(value)});
    }
    return from_triplets(rows, cols, std::move(t));
  }

  friend bool operator==(const SparseIntMatrix& a, const SparseIntMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols() != b.cols()) return false;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const auto& x = a.columns_[j];
      const auto& y = b.columns_[j];
      if (x.size() != y.size()) return false;
      for (std::size_t k = 0; k < x.size(); ++k) {
        if (x[k].row != y[k].row || x[k].value != y[k].value) return false;
      }
    }
    return true;
  }

 private:
  static void normalize(Column& c) {
    std::stable_sort(c.begin(), c.end(), [](const Entry& a, const Entry& b) { return a.row < b.row; });
    Column out;
    out.reserve(c.size());
    for (auto& e : c) {
      if (!out.empty() && out.back().row == e.row) {
        out.back().value += e.value;
      } else {
        out.push_back(std::move(e));
      }
    }
    std::erase_if(out, [](const Entry& e) { return sgn(e.value) == 0; });
    c = std::move(out);
  }

  std::size_t rows_ = 0;
  std::vector<Column> columns_;
};

}  // namespace hypercyc
