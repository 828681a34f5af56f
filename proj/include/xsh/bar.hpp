#pragma once

// The bar construction [n] -> R^{(x)(n+1)} as a functor on the cyclic,
// symmetric and braided categories (the braided one through projection).
// Tensor bases are lexicographic in multi-indices: r_{a_0} (x) ... (x) r_{a_n}
// has index sum a_k d^{n-k}.
//
// Two evaluations are provided.  map() multiplies generator matrices along the
// factorization (phi, e) o (id, gamma) with phi in normal form; apply_basis() reads
// the morphism as a map of finite sets with ordered fibers and multiplies the
// tensor factors of each fiber in order.  They agree; tests hold them to it.

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

#include "xsh/algebra.hpp"
#include "xsh/crossed.hpp"
#include "xsh/error.hpp"
#include "xsh/sparse.hpp"

namespace xsh {

inline long long tensor_dim(int dim, int rank, long long limit = (1ll << 31) - 1) {
  long long d = 1;
  for (int k = 0; k <= rank; ++k) {
    d *= dim;
    if (d > limit) throw resource_error("tensor power R^(x)" + std::to_string(rank + 1) + " is too large");
  }
  return d;
}

template <class F>
class BarFunctor {
 public:
  using Matrix = SparseMatrix<F>;

  BarFunctor(F field, const Algebra& a, Category cat) : alg_(std::move(field), a), cat_(cat) {}

  const AlgebraOver<F>& algebra() const noexcept { return alg_; }
  const F& field() const noexcept { return alg_.field; }
  Category category() const noexcept { return cat_; }

  /// dim R^{(x)(n+1)}; the augmented object (n = -1) is the ground ring.
  int object_dim(int n) const { return static_cast<int>(tensor_dim(alg_.dim, n)); }

  std::vector<int> digits(int n, long long index) const {
    std::vector<int> a(static_cast<std::size_t>(n + 1));
    for (int k = n; k >= 0; --k) {
      a[k] = static_cast<int>(index % alg_.dim);
      index /= alg_.dim;
    }
    return a;
  }

  /// Tensor product of per-slot vectors, in slot order.
  SparseVec<F> tensor(const std::vector<SparseVec<F>>& slots) const {
    SparseVec<F> cur{{0, field().one()}};
    for (const auto& v : slots) {
      SparseVec<F> next;
      next.reserve(cur.size() * v.size());
      for (const auto& [idx, a] : cur)
        for (const auto& [k, b] : v) next.emplace_back(idx * alg_.dim + k, field().mul(a, b));
      cur = std::move(next);
    }
    normalize(field(), cur);
    return cur;
  }

  /// Direct evaluation on one basis tensor: slot k of the output is the
  /// ordered product of the inputs in the fiber over k.
  SparseVec<F> apply_basis(const XMorphism& f, long long index) const {
    check_category(f);
    const int m = f.source_rank(), n = f.target_rank();
    const std::vector<int> a = m >= 0 ? digits(m, index) : std::vector<int>{};
    const Permutation gamma = f.permutation();
    std::vector<SparseVec<F>> slots(static_cast<std::size_t>(n + 1), alg_.unit);
    std::vector<bool> started(static_cast<std::size_t>(n + 1), false);
    for (int i = 0; i <= m; ++i) {
      const int k = f.delta()(i);
      const SparseVec<F> r{{a[gamma(i)], field().one()}};
      slots[k] = started[k] ? alg_.multiply(slots[k], r) : r;
      started[k] = true;
    }
    return tensor(slots);
  }

  Matrix matrix_direct(const XMorphism& f) const {
    Matrix out(field(), object_dim(f.target_rank()), object_dim(f.source_rank()));
    for (int c = 0; c < out.cols(); ++c) out.set_column(c, apply_basis(f, c));
    return out;
  }

  /// Matrix through generators: faces insert the unit, degeneracies multiply
  /// adjacent factors, (id, gamma) puts r_{gamma(k)} in slot k.
  Matrix map(const XMorphism& f) const {
    check_category(f);
    const int m = f.source_rank();
    if (m < 0) return matrix_direct(f);
    Matrix acc = permutation_matrix(f.permutation());
    const NormalForm nf = normal_form(f.delta());
    int rank = m;
    for (auto it = nf.degeneracies.rbegin(); it != nf.degeneracies.rend(); ++it) {
      acc = generator_matrix(GeneratorKind::degeneracy, *it, rank - 1) * acc;
      --rank;
    }
    for (auto it = nf.faces.rbegin(); it != nf.faces.rend(); ++it) {
      acc = generator_matrix(GeneratorKind::face, *it, rank + 1) * acc;
      ++rank;
    }
    return acc;
  }

  /// delta^i_n : R^{(x)n} -> R^{(x)(n+1)} or sigma^i_n : R^{(x)(n+2)} -> R^{(x)(n+1)}.
  const Matrix& generator_matrix(GeneratorKind kind, int i, int n) const {
    const auto key = std::make_tuple(kind == GeneratorKind::face ? 0 : 1, i, n);
    {
      std::lock_guard<std::mutex> lock(cache_->mu);
      auto it = cache_->gens.find(key);
      if (it != cache_->gens.end()) return *it->second;
    }
    auto built = std::make_shared<Matrix>(build_generator(kind, i, n));
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto [it, inserted] = cache_->gens.emplace(key, std::move(built));
    return *it->second;
  }

  Matrix permutation_matrix(const Permutation& gamma) const {
    const int n = gamma.size() - 1;
    Matrix out(field(), object_dim(n), object_dim(n));
    for (int c = 0; c < out.cols(); ++c) {
      const auto a = digits(n, c);
      long long idx = 0;
      for (int k = 0; k <= n; ++k) idx = idx * alg_.dim + a[gamma(k)];
      out.set_column(c, {{static_cast<int>(idx), field().one()}});
    }
    return out;
  }

 private:
  void check_category(const XMorphism& f) const {
    const bool ok = f.category() == cat_ || (cat_ == Category::symmetric && f.category() == Category::cyclic);
    detail::require(ok, "bar functor: morphism from the wrong category");
  }

  Matrix build_generator(GeneratorKind kind, int i, int n) const {
    if (kind == GeneratorKind::face) {
      detail::require(n >= 1 && i >= 0 && i <= n, "face index out of range");
      Matrix out(field(), object_dim(n), object_dim(n - 1));
      for (int c = 0; c < out.cols(); ++c) {
        const auto a = digits(n - 1, c);
        std::vector<SparseVec<F>> slots;
        for (int k = 0; k <= n; ++k) {
          if (k == i) slots.push_back(alg_.unit);
          if (k < n) slots.push_back({{a[k], field().one()}});
        }
        out.set_column(c, tensor(slots));
      }
      return out;
    }
    detail::require(n >= 0 && i >= 0 && i <= n, "degeneracy index out of range");
    Matrix out(field(), object_dim(n), object_dim(n + 1));
    for (int c = 0; c < out.cols(); ++c) {
      const auto a = digits(n + 1, c);
      std::vector<SparseVec<F>> slots;
      for (int k = 0; k <= n + 1; ++k) {
        if (k == i + 1) continue;
        slots.push_back(k == i ? alg_.product(a[i], a[i + 1]) : SparseVec<F>{{a[k], field().one()}});
      }
      out.set_column(c, tensor(slots));
    }
    return out;
  }

  struct Cache {
    std::mutex mu;
    std::map<std::tuple<int, int, int>, std::shared_ptr<Matrix>> gens;
  };

  AlgebraOver<F> alg_;
  Category cat_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// d_i of the cyclic bar construction on R^{(x)(n+1)}, from the formula
/// r_0 (x) ... (x) r_i r_{i+1} (x) ... for i < n and r_n r_0 (x) r_1 (x) ... for i = n.
template <class F>
SparseMatrix<F> cyclic_bar_face(const BarFunctor<F>& B, int n, int i) {
  detail::require(n >= 1 && i >= 0 && i <= n, "cyclic_bar_face: need 0 <= i <= n, n >= 1");
  const auto& A = B.algebra();
  SparseMatrix<F> out(B.field(), B.object_dim(n - 1), B.object_dim(n));
  for (int c = 0; c < out.cols(); ++c) {
    const auto a = B.digits(n, c);
    std::vector<SparseVec<F>> slots;
    if (i < n) {
      for (int k = 0; k <= n; ++k) {
        if (k == i + 1) continue;
        slots.push_back(k == i ? A.product(a[i], a[i + 1]) : SparseVec<F>{{a[k], B.field().one()}});
      }
    } else {
      slots.push_back(A.product(a[n], a[0]));
      for (int k = 1; k < n; ++k) slots.push_back({{a[k], B.field().one()}});
    }
    out.set_column(c, B.tensor(slots));
  }
  return out;
}

/// The same face, obtained as the bar functor applied to the dual of the coface.
template <class F>
SparseMatrix<F> cyclic_bar_face_via_duality(const BarFunctor<F>& B, int n, int i) {
  return B.map(cyclic_duality(x_face(Category::cyclic, i, n)));
}

/// Alternating sum of cyclic bar faces: R^{(x)(n+1)} -> R^{(x)n}.
template <class F>
SparseMatrix<F> hochschild_differential(const BarFunctor<F>& B, int n) {
  SparseMatrix<F> d(B.field(), B.object_dim(n - 1), B.object_dim(n));
  for (int i = 0; i <= n; ++i) {
    auto face = cyclic_bar_face(B, n, i);
    d = i % 2 == 0 ? d + face : d - face;
  }
  return d;
}

}  // namespace xsh
