#pragma once

// Finite-dimensional unital associative algebras given by structure constants
// e_i e_j = sum_k c_{ijk} e_k over Q, F_p or Z.

#include <gmpxx.h>

#include <algorithm>
#include <numeric>
#include <string>
#include <tuple>
#include <type_traits>
#include <vector>

#include "xsh/error.hpp"
#include "xsh/field.hpp"
#include "xsh/sparse.hpp"

namespace xsh {

class Algebra {
 public:
  using Entry = std::pair<int, mpq_class>;  // (k, c_{ijk})

  /// constants: (i, j, k, value) quadruples, duplicates summed; unit: coordinates
  /// of 1.  Throws validation_error on non-associative or non-unital data.
  Algebra(Ring ring, int dim, const std::vector<std::tuple<int, int, int, mpq_class>>& constants,
          std::vector<mpq_class> unit, std::string name = {})
      : ring_(ring), dim_(dim), name_(std::move(name)), table_(static_cast<std::size_t>(dim) * dim), unit_(std::move(unit)) {
    detail::require(dim >= 1, "algebra dimension must be >= 1");
    detail::require(static_cast<int>(unit_.size()) == dim, "unit vector must have length dim");
    for (const auto& [i, j, k, v] : constants) {
      if (i < 0 || i >= dim || j < 0 || j >= dim || k < 0 || k >= dim)
        throw validation_error("structure constant index out of range: (" + std::to_string(i) + "," +
                               std::to_string(j) + "," + std::to_string(k) + ")");
      table_[static_cast<std::size_t>(i) * dim + j].emplace_back(k, v);
    }
    visit_ring(ring_, [&](const auto& f) {
      for (auto& cell : table_) canonicalize(f, cell);
      std::vector<std::pair<int, mpq_class>> u;
      for (int k = 0; k < dim_; ++k) u.emplace_back(k, unit_[k]);
      canonicalize(f, u);
      std::vector<mpq_class> dense(static_cast<std::size_t>(dim_), 0);
      for (auto& [k, v] : u) dense[k] = v;
      unit_ = std::move(dense);
      return 0;
    });
    validate();
  }

  const Ring& ring() const noexcept { return ring_; }
  int dim() const noexcept { return dim_; }
  const std::string& name() const noexcept { return name_; }
  const std::vector<Entry>& product(int i, int j) const { return table_.at(static_cast<std::size_t>(i) * dim_ + j); }
  const std::vector<mpq_class>& unit() const noexcept { return unit_; }

  /// Bilinear product of coordinate vectors.
  std::vector<mpq_class> multiply(const std::vector<mpq_class>& x, const std::vector<mpq_class>& y) const {
    detail::require(static_cast<int>(x.size()) == dim_ && static_cast<int>(y.size()) == dim_,
                    "multiply: vector length must equal dim");
    return visit_ring(ring_, [&](const auto& f) {
      std::vector<mpq_class> out(static_cast<std::size_t>(dim_), 0);
      for (int i = 0; i < dim_; ++i) {
        if (sgn(x[i]) == 0) continue;
        for (int j = 0; j < dim_; ++j) {
          if (sgn(y[j]) == 0) continue;
          for (const auto& [k, c] : product(i, j)) out[k] += x[i] * y[j] * c;
        }
      }
      std::vector<std::pair<int, mpq_class>> s;
      for (int k = 0; k < dim_; ++k) s.emplace_back(k, out[k]);
      canonicalize(f, s);
      std::fill(out.begin(), out.end(), mpq_class(0));
      for (auto& [k, v] : s) out[k] = v;
      return out;
    });
  }

  bool is_commutative() const {
    for (int i = 0; i < dim_; ++i)
      for (int j = i + 1; j < dim_; ++j)
        if (product(i, j) != product(j, i)) return false;
    return true;
  }

  /// All (i, j, k, c) with c != 0, sorted.
  std::vector<std::tuple<int, int, int, mpq_class>> constants() const {
    std::vector<std::tuple<int, int, int, mpq_class>> out;
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j)
        for (const auto& [k, c] : product(i, j)) out.emplace_back(i, j, k, c);
    return out;
  }

 private:
  /// Reduce values into the ring (mod p over F_p, integrality over Z), merge
  /// duplicates and drop zeros.
  template <class F>
  static void canonicalize(const F& f, std::vector<std::pair<int, mpq_class>>& cell) {
    SparseVec<F> v;
    for (const auto& [k, c] : cell) {
      try {
        v.emplace_back(k, f.from_mpq(c));
      } catch (const argument_error& e) {
        throw validation_error(e.what());
      }
    }
    normalize(f, v);
    cell.clear();
    for (const auto& [k, c] : v) {
      if constexpr (std::is_same_v<F, PrimeField>)
        cell.emplace_back(k, mpq_class(static_cast<unsigned long>(c)));
      else
        cell.emplace_back(k, mpq_class(c));
    }
  }

  void validate() const {
    visit_ring(ring_, [&](const auto& f) {
      using F = std::decay_t<decltype(f)>;
      auto conv = [&](const std::vector<Entry>& cell) {
        SparseVec<F> v;
        for (const auto& [k, c] : cell) v.emplace_back(k, f.from_mpq(c));
        return v;
      };
      // right multiplication of a vector by basis element j
      auto times = [&](const SparseVec<F>& x, int j, bool left) {
        SparseVec<F> out;
        for (const auto& [i, a] : x)
          for (const auto& [k, c] : conv(left ? product(j, i) : product(i, j))) out.emplace_back(k, f.mul(a, c));
        normalize(f, out);
        return out;
      };
      for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) {
          const SparseVec<F> ij = conv(product(i, j));
          for (int k = 0; k < dim_; ++k) {
            const SparseVec<F> lhs = times(ij, k, false);
            const SparseVec<F> rhs = times(conv(product(j, k)), i, true);
            if (lhs != rhs)
              throw validation_error("associativity fails for basis triple (" + std::to_string(i) + "," +
                                     std::to_string(j) + "," + std::to_string(k) + ")");
          }
        }
      SparseVec<F> u;
      for (int k = 0; k < dim_; ++k) u.emplace_back(k, f.from_mpq(unit_[k]));
      normalize(f, u);
      for (int x = 0; x < dim_; ++x) {
        const SparseVec<F> ex{{x, f.one()}};
        if (times(u, x, false) != ex || times(u, x, true) != ex)
          throw validation_error("unit law fails for basis element " + std::to_string(x));
      }
      return 0;
    });
  }

  Ring ring_;
  int dim_;
  std::string name_;
  std::vector<std::vector<Entry>> table_;
  std::vector<mpq_class> unit_;
};

/// Structure constants converted into a concrete field, for the engines.
template <class F>
struct AlgebraOver {
  F field;
  int dim;
  std::vector<SparseVec<F>> table;  // row-major (i, j)
  SparseVec<F> unit;

  AlgebraOver(F f, const Algebra& a) : field(std::move(f)), dim(a.dim()), table(static_cast<std::size_t>(dim) * dim) {
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) {
        auto& cell = table[static_cast<std::size_t>(i) * dim + j];
        for (const auto& [k, c] : a.product(i, j)) cell.emplace_back(k, field.from_mpq(c));
        normalize(field, cell);
      }
    for (int k = 0; k < dim; ++k) unit.emplace_back(k, field.from_mpq(a.unit()[k]));
    normalize(field, unit);
  }

  const SparseVec<F>& product(int i, int j) const { return table[static_cast<std::size_t>(i) * dim + j]; }

  SparseVec<F> multiply(const SparseVec<F>& x, const SparseVec<F>& y) const {
    SparseVec<F> out;
    for (const auto& [i, a] : x)
      for (const auto& [j, b] : y)
        for (const auto& [k, c] : product(i, j)) out.emplace_back(k, field.mul(field.mul(a, b), c));
    normalize(field, out);
    return out;
  }
};

// Builders.

/// A finite group given by its multiplication table (table[g][h] = index of
/// gh); validated as a group.
struct GroupTable {
  std::vector<std::vector<int>> mul;
  int identity = 0;

  int order() const noexcept { return static_cast<int>(mul.size()); }
  int operator()(int g, int h) const { return mul[g][h]; }
  int inverse(int g) const {
    for (int h = 0; h < order(); ++h)
      if (mul[g][h] == identity) return h;
    throw invariant_error("group element without inverse");
  }
};

inline GroupTable make_group(std::vector<std::vector<int>> mul, bool check_associativity = true) {
  const int n = static_cast<int>(mul.size());
  detail::require(n >= 1, "a group needs at least one element");
  for (const auto& row : mul) {
    detail::require(static_cast<int>(row.size()) == n, "group table must be square");
    for (int v : row) detail::require(v >= 0 && v < n, "group table entry out of range");
  }
  int e = -1;
  for (int g = 0; g < n && e < 0; ++g) {
    bool ok = true;
    for (int h = 0; h < n && ok; ++h) ok = mul[g][h] == h && mul[h][g] == h;
    if (ok) e = g;
  }
  detail::require(e >= 0, "group table has no identity element");
  for (int a = 0; a < n && check_associativity; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        detail::require(mul[mul[a][b]][c] == mul[a][mul[b][c]], "group table is not associative");
  for (int g = 0; g < n; ++g) {
    bool has = false;
    for (int h = 0; h < n; ++h) has = has || mul[g][h] == e;
    detail::require(has, "group table element without inverse");
  }
  return {std::move(mul), e};
}

inline GroupTable cyclic_group(int n) {
  std::vector<std::vector<int>> m(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) m[a][b] = (a + b) % n;
  return make_group(std::move(m));
}

/// S_k with elements in lexicographic order of image lists; (gh)(i) = g(h(i)).
inline GroupTable symmetric_group(int k) {
  std::vector<std::vector<int>> perms;
  std::vector<int> p(static_cast<std::size_t>(k));
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const int n = static_cast<int>(perms.size());
  std::vector<std::vector<int>> m(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::vector<int> c(static_cast<std::size_t>(k));
      for (int i = 0; i < k; ++i) c[i] = perms[a][perms[b][i]];
      m[a][b] = static_cast<int>(std::lower_bound(perms.begin(), perms.end(), c) - perms.begin());
    }
  return make_group(std::move(m), k <= 4);
}

/// Image lists of the elements of symmetric_group(k), same order.
inline std::vector<std::vector<int>> symmetric_group_elements(int k) {
  std::vector<std::vector<int>> perms;
  std::vector<int> p(static_cast<std::size_t>(k));
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return perms;
}

inline std::vector<mpq_class> basis_vector(int dim, int k) {
  std::vector<mpq_class> u(static_cast<std::size_t>(dim), 0);
  u[k] = 1;
  return u;
}

inline Algebra ground_algebra(Ring r) { return Algebra(r, 1, {{0, 0, 0, 1}}, {1}, "k"); }

/// k[t]/(t^n), basis 1, t, ..., t^{n-1}.
inline Algebra truncated_poly(Ring r, int n) {
  detail::require(n >= 1, "truncated_poly needs n >= 1");
  std::vector<std::tuple<int, int, int, mpq_class>> c;
  for (int i = 0; i < n; ++i)
    for (int j = 0; i + j < n; ++j) c.emplace_back(i, j, i + j, 1);
  return Algebra(r, n, c, basis_vector(n, 0), "k[t]/t^" + std::to_string(n));
}

inline Algebra dual_numbers(Ring r) { return truncated_poly(r, 2); }

inline Algebra group_algebra(Ring r, const GroupTable& g, std::string name = "k[G]") {
  std::vector<std::tuple<int, int, int, mpq_class>> c;
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b) c.emplace_back(a, b, g(a, b), 1);
  return Algebra(r, g.order(), c, basis_vector(g.order(), g.identity), std::move(name));
}

/// M_n(k), basis e_{ab} at index a*n+b.
inline Algebra matrix_algebra(Ring r, int n) {
  detail::require(n >= 1, "matrix_algebra needs n >= 1");
  std::vector<std::tuple<int, int, int, mpq_class>> c;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int d = 0; d < n; ++d) c.emplace_back(a * n + b, b * n + d, a * n + d, 1);
  std::vector<mpq_class> u(static_cast<std::size_t>(n * n), 0);
  for (int a = 0; a < n; ++a) u[a * n + a] = 1;
  return Algebra(r, n * n, c, u, "M_" + std::to_string(n));
}

inline Algebra direct_sum(const Algebra& a, const Algebra& b) {
  detail::require(a.ring() == b.ring(), "direct_sum: rings differ");
  std::vector<std::tuple<int, int, int, mpq_class>> c = a.constants();
  for (const auto& [i, j, k, v] : b.constants()) c.emplace_back(i + a.dim(), j + a.dim(), k + a.dim(), v);
  std::vector<mpq_class> u = a.unit();
  u.insert(u.end(), b.unit().begin(), b.unit().end());
  return Algebra(a.ring(), a.dim() + b.dim(), c, u, a.name() + " x " + b.name());
}

}  // namespace xsh
