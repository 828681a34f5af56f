#pragma once

// Hochschild homology from the standard complex R^{(x)(n+1)} with
// b = sum (-1)^i d_i, and the degree-0 symmetric homology R / (two-sided ideal
// generated by commutators).

#include <gmpxx.h>

#include <cmath>
#include <deque>
#include <string>
#include <vector>

#include "xsh/algebra.hpp"
#include "xsh/bar.hpp"
#include "xsh/chain_complex.hpp"
#include "xsh/error.hpp"
#include "xsh/linalg.hpp"

namespace xsh {

struct HochschildLimits {
  long long max_cells = 4'000'000;         // dim R^{(x)(d_max+2)}
  long long max_dense_entries = 2'000'000;  // Z only: dense Smith form of d_{d_max+1}
  bool unsafe = false;
};

/// HH_n(R) for n = 0..d_max: dimensions over a field, groups over Z.
inline std::vector<HomologyGroup> hochschild(const Algebra& R, int d_max, const HochschildLimits& lim = {}) {
  detail::require(d_max >= 0, "hochschild: d_max must be >= 0");
  const long long cap = lim.unsafe ? (1ll << 31) - 1 : lim.max_cells;
  try {
    tensor_dim(R.dim(), d_max + 1, cap);
  } catch (const resource_error&) {
    throw resource_error("hochschild: dim(R)^(d_max+2) exceeds the resource guard");
  }
  if (R.ring().kind == Ring::Kind::integer && !lim.unsafe) {
    const long double entries = std::pow(static_cast<long double>(R.dim()), 2 * d_max + 3);
    if (entries > static_cast<long double>(lim.max_dense_entries))
      throw resource_error("hochschild: integral torsion needs a dense Smith form beyond the resource guard");
  }
  return visit_ring(R.ring(), [&](const auto& f) {
    using F = std::decay_t<decltype(f)>;
    const BarFunctor<F> B(f, R, Category::cyclic);
    std::vector<int> dims;
    std::vector<SparseMatrix<F>> diffs;
    for (int n = 0; n <= d_max + 1; ++n) dims.push_back(B.object_dim(n));
    for (int n = 1; n <= d_max + 1; ++n) diffs.push_back(hochschild_differential(B, n));
    const ChainComplex<F> C(f, dims, std::move(diffs));
    std::vector<HomologyGroup> out;
    for (int n = 0; n <= d_max; ++n) out.push_back(C.homology(n));
    return out;
  });
}

struct Hsigma0Result {
  int dim = 0;                      // dimension over a field, free rank over Z
  std::vector<mpz_class> torsion;   // Z only
  int ideal_rank = 0;
  std::vector<int> quotient_basis;  // field case: basis elements spanning a complement of the ideal
  bool two_sided_verified = false;
};

namespace detail {

template <class F>
Hsigma0Result hsigma0_field(const F& f, const Algebra& R) {
  const AlgebraOver<F> A(f, R);
  const int d = A.dim;
  EchelonBasis<F> I(f, d);
  std::vector<SparseVec<F>> members;
  std::deque<SparseVec<F>> queue;
  auto basis = [&](int i) { return SparseVec<F>{{i, f.one()}}; };
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      queue.push_back(axpby(f, f.one(), A.product(i, j), f.neg(f.one()), A.product(j, i)));
  while (!queue.empty()) {
    SparseVec<F> v = std::move(queue.front());
    queue.pop_front();
    if (v.empty() || !I.insert(v)) continue;
    members.push_back(v);
    for (int k = 0; k < d; ++k) {
      queue.push_back(A.multiply(basis(k), v));
      queue.push_back(A.multiply(v, basis(k)));
    }
  }
  Hsigma0Result r;
  r.ideal_rank = I.rank();
  r.dim = d - I.rank();
  r.quotient_basis = I.free_rows();
  bool ok = true;
  for (const auto& v : members)
    for (int k = 0; k < d && ok; ++k) ok = I.contains(A.multiply(basis(k), v)) && I.contains(A.multiply(v, basis(k)));
  r.two_sided_verified = ok;
  return r;
}

inline Hsigma0Result hsigma0_integers(const Algebra& R) {
  const IntegerRing Z;
  const AlgebraOver<IntegerRing> A(Z, R);
  const int d = A.dim;
  auto dense = [&](const SparseVec<IntegerRing>& v) {
    std::vector<mpz_class> out(static_cast<std::size_t>(d), 0);
    for (const auto& [k, c] : v) out[k] = c;
    return out;
  };
  auto sparse = [&](const std::vector<mpz_class>& v) {
    SparseVec<IntegerRing> out;
    for (int k = 0; k < d; ++k)
      if (sgn(v[k]) != 0) out.emplace_back(k, v[k]);
    return out;
  };
  std::vector<std::vector<mpz_class>> gens;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      gens.push_back(dense(axpby(Z, Z.one(), A.product(i, j), Z.neg(Z.one()), A.product(j, i))));
  auto L = hermite_rows(gens, d);
  // Close under left and right multiplication by basis elements.
  while (true) {
    std::vector<std::vector<mpz_class>> more = L;
    for (const auto& row : L)
      for (int k = 0; k < d; ++k) {
        more.push_back(dense(A.multiply({{k, 1}}, sparse(row))));
        more.push_back(dense(A.multiply(sparse(row), {{k, 1}})));
      }
    auto next = hermite_rows(std::move(more), d);
    if (next == L) break;
    L = std::move(next);
  }
  const AbelianGroup q = lattice_quotient(L, d);
  Hsigma0Result r;
  r.dim = q.free_rank;
  r.torsion = q.torsion;
  r.ideal_rank = static_cast<int>(L.size());
  r.two_sided_verified = true;  // L is a fixed point of the closure
  return r;
}

}  // namespace detail

/// R / ([R, R]) with [R, R] the two-sided ideal generated by all commutators.
inline Hsigma0Result hsigma0(const Algebra& R) {
  if (R.ring().kind == Ring::Kind::integer) return detail::hsigma0_integers(R);
  return visit_field(R.ring(), [&](const auto& f) { return detail::hsigma0_field(f, R); });
}

/// dim R - rank of the span of commutators: HH_0 computed without the
/// Hochschild complex.
inline int commutator_quotient_dim(const Algebra& R) {
  return visit_field(R.ring(), [&](const auto& f) {
    const AlgebraOver<std::decay_t<decltype(f)>> A(f, R);
    EchelonBasis<std::decay_t<decltype(f)>> S(f, A.dim);
    for (int i = 0; i < A.dim; ++i)
      for (int j = i + 1; j < A.dim; ++j) S.insert(axpby(f, f.one(), A.product(i, j), f.neg(f.one()), A.product(j, i)));
    return A.dim - S.rank();
  });
}

/// dim of the Kahler differentials I/I^2, I = ker(R (x) R -> R), for
/// commutative R over a field: HH_1 computed from derivations.
inline int kahler_differentials_dim(const Algebra& R) {
  detail::require(R.is_commutative(), "kahler_differentials_dim: algebra must be commutative");
  return visit_field(R.ring(), [&](const auto& f) {
    using F = std::decay_t<decltype(f)>;
    const AlgebraOver<F> A(f, R);
    const int d = A.dim;
    auto pair_mul = [&](const SparseVec<F>& x, const SparseVec<F>& y) {
      SparseVec<F> out;
      for (const auto& [p, a] : x)
        for (const auto& [q, b] : y) {
          const auto left = A.product(p / d, q / d);
          const auto right = A.product(p % d, q % d);
          for (const auto& [i, u] : left)
            for (const auto& [j, v] : right) out.emplace_back(i * d + j, f.mul(f.mul(a, b), f.mul(u, v)));
        }
      normalize(f, out);
      return out;
    };
    // I is spanned by e_i (x) e_j - e_i e_j (x) 1.
    std::vector<SparseVec<F>> gens;
    EchelonBasis<F> I(f, d * d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        SparseVec<F> u{{i * d + j, f.one()}};
        for (const auto& [k, c] : A.product(i, j))
          for (const auto& [l, e] : A.unit) u.emplace_back(k * d + l, f.neg(f.mul(c, e)));
        normalize(f, u);
        if (I.insert(u)) gens.push_back(u);
      }
    EchelonBasis<F> I2(f, d * d);
    for (const auto& x : gens)
      for (const auto& y : gens) I2.insert(pair_mul(x, y));
    return I.rank() - I2.rank();
  });
}

}  // namespace xsh
