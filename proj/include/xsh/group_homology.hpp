#pragma once

// Homology of finite groups with coefficients in finite-dimensional modules,
// from the normalized bar complex
//   C_q = M (x) k[G\{e}]^{(x)q},
//   d(m[g_1|...|g_q]) = g_1^{-1}m [g_2|...|g_q]
//                       + sum_{0<i<q} (-1)^i m [..|g_i g_{i+1}|..]
//                       + (-1)^q m [g_1|...|g_{q-1}],
// with cells whose entries hit the identity dropped.  When the characteristic
// does not divide |G| the positive degrees vanish and only coinvariants are
// computed.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "xsh/algebra.hpp"
#include "xsh/error.hpp"
#include "xsh/linalg.hpp"
#include "xsh/permutation.hpp"
#include "xsh/sparse.hpp"

namespace xsh {

/// A left G-module: one matrix per group element, checked to be a
/// representation of the table.
template <class F>
class GModule {
 public:
  GModule(GroupTable group, int dim, std::vector<SparseMatrix<F>> action, bool validate = true)
      : group_(std::move(group)), dim_(dim), action_(std::move(action)) {
    detail::require(static_cast<int>(action_.size()) == group_.order(), "GModule: need one matrix per group element");
    for (const auto& m : action_)
      detail::require(m.rows() == dim_ && m.cols() == dim_, "GModule: action matrix has the wrong size");
    if (validate) check_relations();
  }

  static GModule trivial(F field, GroupTable group, int dim = 1) {
    std::vector<SparseMatrix<F>> act(static_cast<std::size_t>(group.order()), SparseMatrix<F>::identity(field, dim));
    return GModule(std::move(group), dim, std::move(act), false);
  }

  const GroupTable& group() const noexcept { return group_; }
  int dim() const noexcept { return dim_; }
  const SparseMatrix<F>& act(int g) const { return action_.at(static_cast<std::size_t>(g)); }
  const F& field() const { return action_.front().field(); }

  void check_relations() const {
    const int n = group_.order();
    detail::require(act(group_.identity) == SparseMatrix<F>::identity(field(), dim_),
                    "GModule: identity does not act trivially");
    for (int g = 0; g < n; ++g)
      for (int h = 0; h < n; ++h)
        if (!(act(g) * act(h) == act(group_(g, h))))
          throw validation_error("GModule: action violates the group law at (" + std::to_string(g) + "," +
                                 std::to_string(h) + ")");
  }

 private:
  GroupTable group_;
  int dim_;
  std::vector<SparseMatrix<F>> action_;
};

inline std::vector<std::vector<int>> tensor_multi_indices(const std::vector<int>& basis_degrees, int k, int degree) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  const int n = static_cast<int>(basis_degrees.size());
  auto rec = [&](auto&& self, int left, int deg) -> void {
    if (left == 0) {
      if (deg == degree) out.push_back(cur);
      return;
    }
    for (int i = 0; i < n; ++i) {
      if (deg + basis_degrees[i] > degree) continue;
      cur.push_back(i);
      self(self, left - 1, deg + basis_degrees[i]);
      cur.pop_back();
    }
  };
  rec(rec, k, 0);
  return out;
}

/// Koszul-signed action of a permutation on V^{(x)k}, restricted to tensors of
/// total internal degree `degree`; V has basis_degrees[i] as the degree of its
/// i-th basis vector.  Slot sigma(a) of the image holds the factor from slot a,
/// with sign the parity of deg*deg summed over inverted pairs.
template <class F>
SparseMatrix<F> graded_perm_action(const F& field, const std::vector<int>& basis_degrees, int k, int degree,
                                   const Permutation& sigma) {
  detail::require(sigma.size() == k, "graded_perm_action: permutation size must equal the tensor power");
  const auto basis = tensor_multi_indices(basis_degrees, k, degree);
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = static_cast<int>(i);
  const int n = static_cast<int>(basis.size());
  SparseMatrix<F> out(field, n, n);
  for (int c = 0; c < n; ++c) {
    const auto& v = basis[c];
    std::vector<int> w(static_cast<std::size_t>(k));
    for (int a = 0; a < k; ++a) w[sigma(a)] = v[a];
    int parity = 0;
    for (int a = 0; a < k; ++a)
      for (int b = a + 1; b < k; ++b)
        if (sigma(a) > sigma(b)) parity += basis_degrees[v[a]] * basis_degrees[v[b]];
    const auto one = field.one();
    out.set_column(c, {{index.at(w), parity % 2 ? field.neg(one) : one}});
  }
  return out;
}

/// V^{(x)k} in internal degree `degree` as a module over symmetric_group(k).
/// The representation check runs for k <= 4.
template <class F>
GModule<F> tensor_power_module(const F& field, const std::vector<int>& basis_degrees, int k, int degree) {
  GroupTable g = symmetric_group(k);
  const auto elems = symmetric_group_elements(k);
  std::vector<SparseMatrix<F>> act;
  for (const auto& e : elems) act.push_back(graded_perm_action(field, basis_degrees, k, degree, Permutation(e)));
  const int dim = static_cast<int>(tensor_multi_indices(basis_degrees, k, degree).size());
  return GModule<F>(std::move(g), dim, std::move(act), k <= 4);
}

struct GroupHomologyLimits {
  int max_order = 24;
  int max_degree = 4;
  std::uint64_t max_cells = 4'000'000;  // cells of the largest chain group built
  bool unsafe = false;
};

/// Builds d_q : C_q -> C_{q-1} of the normalized bar complex.
template <class F>
SparseMatrix<F> bar_resolution_differential(const GModule<F>& M, int q) {
  const GroupTable& G = M.group();
  const F& field = M.field();
  std::vector<int> nonid;
  std::vector<int> pos(static_cast<std::size_t>(G.order()), -1);
  for (int g = 0; g < G.order(); ++g)
    if (g != G.identity) {
      pos[g] = static_cast<int>(nonid.size());
      nonid.push_back(g);
    }
  const long long b = static_cast<long long>(nonid.size());
  auto cells = [&](int deg) {
    long long c = 1;
    for (int i = 0; i < deg; ++i) c *= b;
    return c;
  };
  const int dimM = M.dim();
  SparseMatrix<F> d(field, static_cast<int>(cells(q - 1) * dimM), static_cast<int>(cells(q) * dimM));
  std::vector<int> g(static_cast<std::size_t>(q));
  std::vector<int> inv(static_cast<std::size_t>(G.order()));
  for (int x = 0; x < G.order(); ++x) inv[x] = G.inverse(x);
  auto encode = [&](const std::vector<int>& elems) {
    long long idx = 0;
    for (int e : elems) idx = idx * b + pos[e];
    return idx;
  };
  const auto one = field.one();
  const auto minus = field.neg(one);
  for (long long cell = 0; cell < cells(q); ++cell) {
    long long rest = cell;
    for (int i = q - 1; i >= 0; --i) {
      g[i] = nonid[rest % b];
      rest /= b;
    }
    for (int m = 0; m < dimM; ++m) {
      SparseVec<F> col;
      {
        const std::vector<int> tail(g.begin() + 1, g.end());
        const long long base = encode(tail) * dimM;
        for (const auto& [r, v] : M.act(inv[g[0]]).column(m)) col.emplace_back(static_cast<int>(base + r), v);
      }
      for (int i = 1; i < q; ++i) {
        const int prod = G(g[i - 1], g[i]);
        if (prod == G.identity) continue;
        std::vector<int> merged(g.begin(), g.begin() + (i - 1));
        merged.push_back(prod);
        merged.insert(merged.end(), g.begin() + i + 1, g.end());
        col.emplace_back(static_cast<int>(encode(merged) * dimM + m), i % 2 ? minus : one);
      }
      {
        const std::vector<int> head(g.begin(), g.end() - 1);
        col.emplace_back(static_cast<int>(encode(head) * dimM + m), q % 2 ? minus : one);
      }
      d.set_column(static_cast<int>(cell * dimM + m), std::move(col));
    }
  }
  return d;
}

/// dim H_q(G; M) for q = 0..q_max over a field.
template <class F>
std::vector<int> group_homology(const GModule<F>& M, int q_max, const GroupHomologyLimits& lim = {}) {
  static_assert(F::is_field, "group_homology works over fields");
  detail::require(q_max >= 0, "group_homology: q_max must be >= 0");
  const GroupTable& G = M.group();
  const std::uint32_t p = M.field().characteristic();
  const bool semisimple = p == 0 || G.order() % static_cast<int>(p) != 0;
  const int top = semisimple ? 1 : q_max + 1;
  if (!lim.unsafe) {
    long double cells = M.dim();
    for (int i = 0; i < top; ++i) cells *= G.order() - 1;
    // small groups in low degrees get the full budget, everything else a quarter
    const bool desk = G.order() <= lim.max_order && q_max <= lim.max_degree;
    const long double budget = static_cast<long double>(lim.max_cells) / (desk ? 1 : 4);
    if (cells > budget)
      throw resource_error("group homology: |G|=" + std::to_string(G.order()) + ", q_max=" + std::to_string(q_max) +
                           " exceeds the resource guard (use unsafe limits to override)");
  }
  std::vector<int> out(static_cast<std::size_t>(q_max + 1), 0);
  std::vector<int> ranks(static_cast<std::size_t>(top + 2), 0);
  for (int q = 1; q <= top; ++q) ranks[q] = rank(bar_resolution_differential(M, q));
  long long cellsq = 1;
  for (int q = 0; q <= q_max; ++q) {
    if (semisimple && q >= 1) break;
    const long long dimC = cellsq * M.dim();
    out[q] = static_cast<int>(dimC - ranks[q] - ranks[q + 1]);
    cellsq *= G.order() - 1;
  }
  return out;
}

}  // namespace xsh
