#pragma once

// Column-major sparse matrices over an exact ring.  Columns are kept sorted by
// row with no duplicates and no stored zeros.

#include <algorithm>
#include <ostream>
#include <tuple>
#include <utility>
#include <vector>

#include "xsh/error.hpp"
#include "xsh/field.hpp"

namespace xsh {

template <class F>
using SparseVec = std::vector<std::pair<int, typename F::Element>>;

template <class F>
void normalize(const F& field, SparseVec<F>& v) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < v.size();) {
    const int row = v[i].first;
    auto acc = v[i].second;
    std::size_t j = i + 1;
    for (; j < v.size() && v[j].first == row; ++j) acc = field.add(acc, v[j].second);
    if (!field.is_zero(acc)) v[out++] = {row, std::move(acc)};
    i = j;
  }
  v.resize(out);
}

/// a*x + b*y for sorted sparse vectors.
template <class F>
SparseVec<F> axpby(const F& field, const typename F::Element& a, const SparseVec<F>& x, const typename F::Element& b,
                   const SparseVec<F>& y) {
  SparseVec<F> r;
  r.reserve(x.size() + y.size());
  auto i = x.begin(), j = y.begin();
  while (i != x.end() || j != y.end()) {
    if (j == y.end() || (i != x.end() && i->first < j->first)) {
      auto v = field.mul(a, i->second);
      if (!field.is_zero(v)) r.emplace_back(i->first, std::move(v));
      ++i;
    } else if (i == x.end() || j->first < i->first) {
      auto v = field.mul(b, j->second);
      if (!field.is_zero(v)) r.emplace_back(j->first, std::move(v));
      ++j;
    } else {
      auto v = field.add(field.mul(a, i->second), field.mul(b, j->second));
      if (!field.is_zero(v)) r.emplace_back(i->first, std::move(v));
      ++i, ++j;
    }
  }
  return r;
}

template <class F>
class SparseMatrix {
 public:
  using Element = typename F::Element;

  SparseMatrix(F field, int rows, int cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), columns_(static_cast<std::size_t>(cols)) {
    detail::require(rows >= 0 && cols >= 0, "matrix dimensions must be nonnegative");
  }

  static SparseMatrix identity(F field, int n) {
    SparseMatrix m(field, n, n);
    for (int i = 0; i < n; ++i) m.columns_[i].emplace_back(i, field.one());
    return m;
  }

  static SparseMatrix from_triplets(F field, int rows, int cols, const std::vector<std::tuple<int, int, Element>>& t) {
    SparseMatrix m(field, rows, cols);
    for (const auto& [r, c, v] : t) {
      detail::require(r >= 0 && r < rows && c >= 0 && c < cols, "triplet index out of range");
      m.columns_[c].emplace_back(r, v);
    }
    for (auto& col : m.columns_) normalize(m.field_, col);
    return m;
  }

  const F& field() const noexcept { return field_; }
  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  const SparseVec<F>& column(int c) const { return columns_.at(static_cast<std::size_t>(c)); }

  void set_column(int c, SparseVec<F> v) {
    normalize(field_, v);
    detail::require(v.empty() || (v.front().first >= 0 && v.back().first < rows_), "column entry out of range");
    columns_.at(static_cast<std::size_t>(c)) = std::move(v);
  }

  /// Append a column; returns its index.
  int push_column(SparseVec<F> v) {
    columns_.emplace_back();
    ++cols_;
    set_column(cols_ - 1, std::move(v));
    return cols_ - 1;
  }

  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const auto& c : columns_) n += c.size();
    return n;
  }

  bool is_zero() const {
    return std::all_of(columns_.begin(), columns_.end(), [](const auto& c) { return c.empty(); });
  }

  Element at(int r, int c) const {
    const auto& col = column(c);
    auto it = std::lower_bound(col.begin(), col.end(), r, [](const auto& e, int row) { return e.first < row; });
    return it != col.end() && it->first == r ? it->second : field_.zero();
  }

  SparseVec<F> apply(const SparseVec<F>& x) const {
    SparseVec<F> out;
    for (const auto& [c, v] : x) {
      detail::require(c >= 0 && c < cols_, "apply: vector index out of range");
      for (const auto& [r, a] : columns_[c]) out.emplace_back(r, field_.mul(a, v));
    }
    normalize(field_, out);
    return out;
  }

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    detail::require(a.cols_ == b.rows_, "matrix product: dimension mismatch");
    SparseMatrix r(a.field_, a.rows_, b.cols_);
    for (int c = 0; c < b.cols_; ++c) r.columns_[c] = a.apply(b.columns_[c]);
    return r;
  }

  friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) {
    detail::require(a.rows_ == b.rows_ && a.cols_ == b.cols_, "matrix sum: dimension mismatch");
    SparseMatrix r(a.field_, a.rows_, a.cols_);
    const auto one = a.field_.one();
    for (int c = 0; c < a.cols_; ++c) r.columns_[c] = axpby(a.field_, one, a.columns_[c], one, b.columns_[c]);
    return r;
  }

  SparseMatrix scaled(const Element& s) const {
    SparseMatrix r(field_, rows_, cols_);
    for (int c = 0; c < cols_; ++c) r.columns_[c] = axpby(field_, s, columns_[c], field_.zero(), SparseVec<F>{});
    return r;
  }

  friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) {
    return a + b.scaled(a.field_.neg(a.field_.one()));
  }

  SparseMatrix transposed() const {
    SparseMatrix t(field_, cols_, rows_);
    for (int c = 0; c < cols_; ++c)
      for (const auto& [r, v] : columns_[c]) t.columns_[r].emplace_back(c, v);
    return t;
  }

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.columns_ == b.columns_;
  }

  /// "row,col,value" lines, column-major order.
  void write_triplets_csv(std::ostream& os) const {
    os << "row,col,value\n";
    for (int c = 0; c < cols_; ++c)
      for (const auto& [r, v] : columns_[c]) os << r << ',' << c << ',' << field_.to_string(v) << '\n';
  }

 private:
  F field_;
  int rows_;
  int cols_;
  std::vector<SparseVec<F>> columns_;
};

/// Horizontal concatenation [a | b].
template <class F>
SparseMatrix<F> hconcat(const SparseMatrix<F>& a, const SparseMatrix<F>& b) {
  detail::require(a.rows() == b.rows(), "hconcat: row count mismatch");
  SparseMatrix<F> r(a.field(), a.rows(), 0);
  for (int c = 0; c < a.cols(); ++c) r.push_column(a.column(c));
  for (int c = 0; c < b.cols(); ++c) r.push_column(b.column(c));
  return r;
}

}  // namespace xsh
