#pragma once

// Exact elimination.
//
// EchelonBasis grows a basis of a subspace one vector at a time, keyed by the
// largest row index of each stored vector.  Over F_p the stored vectors are
// monic in that row.  Over Q (and for Q-rank of integer data) vectors are kept
// as primitive integer vectors and combined fraction-free, so no rational
// arithmetic happens during elimination.
//
// Dense integer Smith and Hermite normal forms sit below; they are only used on
// small matrices.

#include <gmpxx.h>

#include <algorithm>
#include <string>
#include <type_traits>
#include <vector>

#include "xsh/error.hpp"
#include "xsh/field.hpp"
#include "xsh/sparse.hpp"

namespace xsh {

namespace detail {

using ZVec = std::vector<std::pair<int, mpz_class>>;

inline void make_primitive(ZVec& v) {
  if (v.empty()) return;
  mpz_class g = 0;
  for (const auto& e : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.second.get_mpz_t());
    if (g == 1) break;
  }
  if (v.back().second < 0) g = -g;
  if (g != 1)
    for (auto& e : v) mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), g.get_mpz_t());
}

/// a*x - b*y.
inline ZVec z_combine(const mpz_class& a, const ZVec& x, const mpz_class& b, const ZVec& y) {
  ZVec r;
  r.reserve(x.size() + y.size());
  auto i = x.begin(), j = y.begin();
  while (i != x.end() || j != y.end()) {
    if (j == y.end() || (i != x.end() && i->first < j->first)) {
      r.emplace_back(i->first, a * i->second);
      ++i;
    } else if (i == x.end() || j->first < i->first) {
      r.emplace_back(j->first, -b * j->second);
      ++j;
    } else {
      mpz_class v = a * i->second - b * j->second;
      if (sgn(v) != 0) r.emplace_back(i->first, std::move(v));
      ++i, ++j;
    }
  }
  return r;
}

template <class F>
ZVec to_integer_vector(const F&, const SparseVec<F>& v) {
  ZVec out;
  out.reserve(v.size());
  if constexpr (std::is_same_v<typename F::Element, mpq_class>) {
    mpz_class l = 1;
    for (const auto& e : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.second.get_den_mpz_t());
    for (const auto& e : v) out.emplace_back(e.first, e.second.get_num() * (l / e.second.get_den()));
  } else {
    for (const auto& e : v) out.emplace_back(e.first, e.second);
  }
  return out;
}

}  // namespace detail

template <class F>
class EchelonBasis {
  static constexpr bool modular = std::is_same_v<F, PrimeField>;
  using Stored = std::conditional_t<modular, SparseVec<F>, detail::ZVec>;

 public:
  EchelonBasis(F field, int ambient)
      : field_(std::move(field)), ambient_(ambient), slot_(static_cast<std::size_t>(ambient), -1) {}

  int ambient() const noexcept { return ambient_; }
  int rank() const noexcept { return static_cast<int>(basis_.size()); }
  bool full() const noexcept { return rank() == ambient_; }

  /// Adds v if it is independent of the current basis; returns whether it was.
  bool insert(const SparseVec<F>& v) {
    Stored r = reduce(v);
    if (r.empty()) return false;
    const int low = r.back().first;
    if constexpr (modular) {
      const auto inv = field_.inv(r.back().second);
      for (auto& e : r) e.second = field_.mul(e.second, inv);
    }
    slot_[low] = static_cast<int>(basis_.size());
    basis_.push_back(std::move(r));
    return true;
  }

  bool contains(const SparseVec<F>& v) const { return reduce(v).empty(); }

  /// Rows that carry a leading entry; the remaining standard basis vectors
  /// span a complement.
  std::vector<int> pivot_rows() const {
    std::vector<int> out;
    for (int r = 0; r < ambient_; ++r)
      if (slot_[r] >= 0) out.push_back(r);
    return out;
  }

  std::vector<int> free_rows() const {
    std::vector<int> out;
    for (int r = 0; r < ambient_; ++r)
      if (slot_[r] < 0) out.push_back(r);
    return out;
  }

 private:
  Stored reduce(const SparseVec<F>& v) const {
    for (const auto& e : v) detail::require(e.first >= 0 && e.first < ambient_, "vector index out of range");
    if constexpr (modular) {
      SparseVec<F> r = v;
      while (!r.empty()) {
        const int s = slot_[r.back().first];
        if (s < 0) break;
        const auto c = r.back().second;
        r = axpby(field_, field_.one(), r, field_.neg(c), basis_[s]);
      }
      return r;
    } else {
      detail::ZVec r = detail::to_integer_vector(field_, v);
      detail::make_primitive(r);
      while (!r.empty()) {
        const int s = slot_[r.back().first];
        if (s < 0) break;
        const auto& p = basis_[s];
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), p.back().second.get_mpz_t(), r.back().second.get_mpz_t());
        const mpz_class a = p.back().second / g, b = r.back().second / g;
        r = detail::z_combine(a, r, b, p);
        detail::make_primitive(r);
      }
      return r;
    }
  }

  F field_;
  int ambient_;
  std::vector<int> slot_;
  std::vector<Stored> basis_;
};

template <class F>
int rank(const SparseMatrix<F>& m) {
  EchelonBasis<F> eb(m.field(), m.rows());
  for (int c = 0; c < m.cols() && !eb.full(); ++c) eb.insert(m.column(c));
  return eb.rank();
}

// Dense integer matrices.

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

  static IntMatrix identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r ? static_cast<int>(rows[0].size()) : 0;
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
      detail::require(static_cast<int>(rows[i].size()) == c, "ragged integer matrix");
      for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  template <class F>
  static IntMatrix from_sparse(const SparseMatrix<F>& s) {
    IntMatrix m(s.rows(), s.cols());
    for (int c = 0; c < s.cols(); ++c)
      for (const auto& [r, v] : s.column(c)) {
        if constexpr (std::is_same_v<typename F::Element, mpz_class>)
          m(r, c) = v;
        else if constexpr (std::is_same_v<typename F::Element, mpq_class>) {
          detail::require(v.get_den() == 1, "from_sparse: non-integral entry");
          m(r, c) = v.get_num();
        } else
          m(r, c) = static_cast<unsigned long>(v);
      }
    return m;
  }

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  mpz_class& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const mpz_class& operator()(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
    detail::require(x.cols_ == y.rows_, "IntMatrix product: dimension mismatch");
    IntMatrix r(x.rows_, y.cols_);
    for (int i = 0; i < x.rows_; ++i)
      for (int k = 0; k < x.cols_; ++k) {
        if (sgn(x(i, k)) == 0) continue;
        for (int j = 0; j < y.cols_; ++j) r(i, j) += x(i, k) * y(k, j);
      }
    return r;
  }

  friend bool operator==(const IntMatrix& x, const IntMatrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }

  void swap_rows(int i, int j) {
    for (int c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
  }
  void swap_cols(int i, int j) {
    for (int r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
  }
  /// row i += k * row j
  void add_row(int i, int j, const mpz_class& k) {
    for (int c = 0; c < cols_; ++c) (*this)(i, c) += k * (*this)(j, c);
  }
  void add_col(int i, int j, const mpz_class& k) {
    for (int r = 0; r < rows_; ++r) (*this)(r, i) += k * (*this)(r, j);
  }
  void negate_row(int i) {
    for (int c = 0; c < cols_; ++c) (*this)(i, c) = -(*this)(i, c);
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<mpz_class> a_;
};

struct SmithForm {
  std::vector<mpz_class> invariants;  // nonzero diagonal entries d_1 | d_2 | ...
  IntMatrix U, V, D;                   // U * M * V = D, U and V unimodular
};

inline bool is_diagonal_chain(const IntMatrix& d, const std::vector<mpz_class>& inv) {
  for (int i = 0; i < d.rows(); ++i)
    for (int j = 0; j < d.cols(); ++j) {
      const bool diag = i == j && i < static_cast<int>(inv.size());
      if (diag ? d(i, j) != inv[i] : sgn(d(i, j)) != 0) return false;
    }
  for (std::size_t k = 1; k < inv.size(); ++k)
    if (inv[k] % inv[k - 1] != 0) return false;
  return true;
}

/// Smith normal form with transforms.  With verify set, U*M*V = D and the
/// divisibility chain are rechecked and unimodularity of U, V is confirmed
/// through |det| = 1 on small sizes.
inline SmithForm smith_normal_form(const IntMatrix& m, bool verify = true) {
  IntMatrix a = m;
  IntMatrix U = IntMatrix::identity(m.rows()), V = IntMatrix::identity(m.cols());
  const int R = m.rows(), C = m.cols();
  std::vector<mpz_class> inv;
  for (int t = 0; t < std::min(R, C); ++t) {
    // Smallest nonzero entry in the trailing block becomes the pivot.
    auto pick = [&](int& pi, int& pj) {
      pi = pj = -1;
      for (int i = t; i < R; ++i)
        for (int j = t; j < C; ++j)
          if (sgn(a(i, j)) != 0 && (pi < 0 || abs(a(i, j)) < abs(a(pi, pj)))) pi = i, pj = j;
    };
    int pi, pj;
    pick(pi, pj);
    if (pi < 0) break;
    while (true) {
      a.swap_rows(t, pi), U.swap_rows(t, pi);
      a.swap_cols(t, pj), V.swap_cols(t, pj);
      bool dirty = false;
      for (int i = t + 1; i < R; ++i) {
        if (sgn(a(i, t)) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
        a.add_row(i, t, -q), U.add_row(i, t, -q);
        if (sgn(a(i, t)) != 0) dirty = true;
      }
      for (int j = t + 1; j < C; ++j) {
        if (sgn(a(t, j)) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
        a.add_col(j, t, -q), V.add_col(j, t, -q);
        if (sgn(a(t, j)) != 0) dirty = true;
      }
      if (!dirty) {
        // Enforce divisibility of the trailing block by the pivot.
        int bi = -1;
        for (int i = t + 1; i < R && bi < 0; ++i)
          for (int j = t + 1; j < C; ++j)
            if (a(i, j) % a(t, t) != 0) {
              bi = i;
              break;
            }
        if (bi < 0) break;
        a.add_row(t, bi, 1), U.add_row(t, bi, 1);
      }
      // Re-pick within row t / column t and the block.
      pi = pj = -1;
      for (int i = t; i < R; ++i)
        if (sgn(a(i, t)) != 0 && (pi < 0 || abs(a(i, t)) < abs(a(pi, pj)))) pi = i, pj = t;
      for (int j = t; j < C; ++j)
        if (sgn(a(t, j)) != 0 && (pi < 0 || abs(a(t, j)) < abs(a(pi, pj)))) pi = t, pj = j;
    }
    if (a(t, t) < 0) a.negate_row(t), U.negate_row(t);
    inv.push_back(a(t, t));
  }
  SmithForm s{inv, std::move(U), std::move(V), a};
  if (verify) {
    detail::ensure(s.U * m * s.V == s.D, "Smith form: U*M*V != D");
    detail::ensure(is_diagonal_chain(s.D, s.invariants), "Smith form: D is not a divisibility chain");
  }
  return s;
}

/// Row Hermite normal form: nonzero rows in echelon shape, positive pivots,
/// entries above each pivot reduced into [0, pivot).
inline std::vector<std::vector<mpz_class>> hermite_rows(std::vector<std::vector<mpz_class>> rows, int cols) {
  int t = 0;
  for (int c = 0; c < cols && t < static_cast<int>(rows.size()); ++c) {
    while (true) {
      int best = -1;
      for (int i = t; i < static_cast<int>(rows.size()); ++i)
        if (sgn(rows[i][c]) != 0 && (best < 0 || abs(rows[i][c]) < abs(rows[best][c]))) best = i;
      if (best < 0) break;
      std::swap(rows[t], rows[best]);
      bool done = true;
      for (int i = t + 1; i < static_cast<int>(rows.size()); ++i) {
        if (sgn(rows[i][c]) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[t][c].get_mpz_t());
        for (int k = 0; k < cols; ++k) rows[i][k] -= q * rows[t][k];
        if (sgn(rows[i][c]) != 0) done = false;
      }
      if (done) break;
    }
    if (sgn(rows[t][c]) == 0) continue;
    if (rows[t][c] < 0)
      for (auto& x : rows[t]) x = -x;
    for (int i = 0; i < t; ++i) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[t][c].get_mpz_t());
      if (sgn(q) != 0)
        for (int k = 0; k < cols; ++k) rows[i][k] -= q * rows[t][k];
    }
    ++t;
  }
  rows.resize(static_cast<std::size_t>(t));
  return rows;
}

/// Z^n / L for the lattice L spanned by the given rows.
struct AbelianGroup {
  int free_rank = 0;
  std::vector<mpz_class> torsion;  // invariant factors > 1

  bool is_zero() const { return free_rank == 0 && torsion.empty(); }
  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

inline std::string to_string(const AbelianGroup& g) {
  if (g.is_zero()) return "0";
  std::string s;
  if (g.free_rank) s = "Z" + (g.free_rank > 1 ? "^" + std::to_string(g.free_rank) : std::string());
  for (const auto& t : g.torsion) s += (s.empty() ? "" : " + ") + ("Z/" + t.get_str());
  return s;
}

inline AbelianGroup lattice_quotient(const std::vector<std::vector<mpz_class>>& rows, int n) {
  IntMatrix m(static_cast<int>(rows.size()), n);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < n; ++j) m(i, j) = rows[i][j];
  const SmithForm s = smith_normal_form(m);
  AbelianGroup g;
  g.free_rank = n - static_cast<int>(s.invariants.size());
  for (const auto& d : s.invariants)
    if (d != 1) g.torsion.push_back(d);
  return g;
}

}  // namespace xsh
