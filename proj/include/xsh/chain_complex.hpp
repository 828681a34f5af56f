#pragma once

// Bounded chain complexes of finite free modules: C_0 <- C_1 <- ... <- C_top.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "xsh/error.hpp"
#include "xsh/linalg.hpp"
#include "xsh/sparse.hpp"

namespace xsh {

/// Homology of one degree: a dimension over a field, or a finitely generated
/// abelian group over Z.
struct HomologyGroup {
  int dim = 0;                            // field case, and free rank over Z
  std::vector<mpz_class> torsion;         // Z only
  bool integral = false;
  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

inline std::string to_string(const HomologyGroup& h) {
  if (!h.integral) return std::to_string(h.dim);
  return to_string(AbelianGroup{h.dim, h.torsion});
}

template <class F>
class ChainComplex {
 public:
  /// dims[n] = rank of C_n; diffs[n-1] is d_n : C_n -> C_{n-1} for n >= 1.
  ChainComplex(F field, std::vector<int> dims, std::vector<SparseMatrix<F>> diffs, bool validate = true)
      : field_(std::move(field)), dims_(std::move(dims)), diffs_(std::move(diffs)) {
    detail::require(diffs_.size() + 1 == dims_.size() || (dims_.empty() && diffs_.empty()),
                    "chain complex needs one differential per positive degree");
    for (std::size_t n = 1; n < dims_.size(); ++n) {
      const auto& d = diffs_[n - 1];
      detail::require(d.rows() == dims_[n - 1] && d.cols() == dims_[n], "differential has the wrong shape");
    }
    if (validate) check_square_zero();
  }

  const F& field() const noexcept { return field_; }
  int top() const noexcept { return static_cast<int>(dims_.size()) - 1; }
  int dim(int n) const { return n < 0 || n > top() ? 0 : dims_[n]; }
  const SparseMatrix<F>& differential(int n) const { return diffs_.at(static_cast<std::size_t>(n - 1)); }

  void check_square_zero() const {
    for (int n = 2; n <= top(); ++n)
      if (!(differential(n - 1) * differential(n)).is_zero())
        throw invariant_error("d o d != 0 at degree " + std::to_string(n));
  }

  int rank_of(int n) const {
    if (n < 1 || n > top()) return 0;
    auto it = rank_cache_.find(n);
    if (it != rank_cache_.end()) return it->second;
    const int r = rank(differential(n));
    rank_cache_[n] = r;
    return r;
  }

  /// H_n; needs d_{n+1} present unless n is the top degree of a complex that
  /// is known to stop there.
  HomologyGroup homology(int n) const {
    detail::require(n >= 0 && n <= top(), "homology degree outside the complex");
    HomologyGroup h;
    h.dim = dim(n) - rank_of(n) - rank_of(n + 1);
    if constexpr (!F::is_field) {
      h.integral = true;
      if (n + 1 <= top()) {
        const auto s = smith_normal_form(IntMatrix::from_sparse(differential(n + 1)));
        for (const auto& d : s.invariants)
          if (d != 1) h.torsion.push_back(d);
      }
    }
    return h;
  }

 private:
  F field_;
  std::vector<int> dims_;
  std::vector<SparseMatrix<F>> diffs_;
  mutable std::map<int, int> rank_cache_;
};

}  // namespace xsh
