#pragma once

// Bousfield-Kan replacement of the bar functor restricted to objects [0..N]:
//   C_p = sum over chains i_0 -> i_1 -> ... -> i_p of R^{(x)(i_0+1)},
//   d_0 pushes x forward along the first map, d_k composes maps k and k+1,
//   d_p drops the last map.
// Braided chains are labelled by the positive lift of the permutation of each
// morphism, so the braided complex is the symmetric one seen through
// projection (the pure braid part is invisible to a functor that factors
// through the symmetric groups).

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "xsh/bar.hpp"
#include "xsh/braid.hpp"
#include "xsh/chain_complex.hpp"
#include "xsh/crossed.hpp"
#include "xsh/error.hpp"
#include "xsh/linalg.hpp"
#include "xsh/ordinal.hpp"
#include "xsh/permutation.hpp"

namespace xsh {

/// Every morphism [m] -> [n] with m, n <= N, in a fixed order.
class MorphismIndex {
 public:
  MorphismIndex(Category cat, int N) : cat_(cat), N_(N) {
    detail::require(N >= 0, "MorphismIndex: N must be >= 0");
    by_pair_.assign(static_cast<std::size_t>((N + 1) * (N + 1)), {});
    std::vector<std::vector<Permutation>> groups(static_cast<std::size_t>(N + 1));
    for (int m = 0; m <= N; ++m) groups[m] = group_elements(m);
    for (int m = 0; m <= N; ++m)
      for (int n = 0; n <= N; ++n)
        for (const auto& phi : all_ordinal_maps(m, n))
          for (const auto& g : groups[m]) {
            XMorphism f = cat == Category::braided ? XMorphism(cat, phi, permutation_braid(g)) : XMorphism(cat, phi, g);
            const int id = static_cast<int>(homs_.size());
            index_.emplace(key(f), id);
            by_pair_[m * (N + 1) + n].push_back(id);
            homs_.push_back(std::move(f));
          }
  }

  Category category() const noexcept { return cat_; }
  int truncation() const noexcept { return N_; }
  int size() const noexcept { return static_cast<int>(homs_.size()); }
  const XMorphism& at(int id) const { return homs_.at(static_cast<std::size_t>(id)); }
  int source(int id) const { return at(id).source_rank(); }
  int target(int id) const { return at(id).target_rank(); }
  const std::vector<int>& homs(int m, int n) const { return by_pair_.at(static_cast<std::size_t>(m * (N_ + 1) + n)); }

  /// Index of the morphism with the same symmetric image as f.
  int find(const XMorphism& f) const {
    auto it = index_.find(key(f));
    detail::ensure(it != index_.end(), "MorphismIndex: morphism outside the truncation");
    return it->second;
  }

  int compose(int g, int f) const {
    const std::uint64_t k = (static_cast<std::uint64_t>(g) << 32) | static_cast<std::uint32_t>(f);
    auto it = composed_.find(k);
    if (it != composed_.end()) return it->second;
    const int id = find(xcompose(at(g), at(f)));
    composed_.emplace(k, id);
    return id;
  }

  static std::vector<int> key(const XMorphism& f) {
    std::vector<int> k{f.source_rank(), f.target_rank()};
    for (int v : f.delta().values()) k.push_back(v);
    const Permutation g = f.permutation();
    for (int v : g.images()) k.push_back(v);
    return k;
  }

 private:
  std::vector<Permutation> group_elements(int m) const {
    std::vector<Permutation> out;
    if (cat_ == Category::cyclic) {
      Permutation c = Permutation::identity(m + 1);
      for (int k = 0; k <= m; ++k) {
        out.push_back(c);
        c = perm_compose(Permutation::rotation(m + 1), c);
      }
      return out;
    }
    for (auto& e : symmetric_group_elements(m + 1)) out.emplace_back(std::move(e));
    return out;
  }

  Category cat_;
  int N_;
  std::vector<XMorphism> homs_;
  std::vector<std::vector<int>> by_pair_;
  std::map<std::vector<int>, int> index_;
  mutable std::unordered_map<std::uint64_t, int> composed_;
};

/// |Hom([m], [n])|: C(m+n+1, m+1) order-preserving maps times the group part.
inline std::uint64_t hom_count(Category cat, int m, int n) {
  const std::uint64_t maps = count_ordinal_maps(m, n);
  std::uint64_t g = 1;
  if (cat == Category::cyclic)
    g = static_cast<std::uint64_t>(m + 1);
  else
    for (int k = 2; k <= m + 1; ++k) g *= static_cast<std::uint64_t>(k);
  return maps * g;
}

struct ReplacementLimits {
  int max_N = 4;
  int max_p = 3;
  long double max_cells = 3e6;  // total dimension of C_0..C_{p_max}
  bool unsafe = false;
};

struct ChainCounts {
  std::vector<long double> chains;  // number of p-chains
  std::vector<long double> cells;   // dim C_p
};

/// Counts by dynamic programming over the last object, without enumeration.
inline ChainCounts count_chains(Category cat, int N, int p_max, int dim) {
  ChainCounts out;
  std::vector<long double> w(static_cast<std::size_t>(N + 1)), c(static_cast<std::size_t>(N + 1), 1);
  long double pw = 1;
  for (int n = 0; n <= N; ++n) w[n] = pw *= dim;
  for (int p = 0; p <= p_max; ++p) {
    long double cs = 0, ws = 0;
    for (int n = 0; n <= N; ++n) {
      cs += c[n];
      ws += w[n];
    }
    out.chains.push_back(cs);
    out.cells.push_back(ws);
    std::vector<long double> w2(w.size(), 0), c2(c.size(), 0);
    for (int m = 0; m <= N; ++m)
      for (int n = 0; n <= N; ++n) {
        const auto h = static_cast<long double>(hom_count(cat, m, n));
        w2[n] += w[m] * h;
        c2[n] += c[m] * h;
      }
    w = std::move(w2);
    c = std::move(c2);
  }
  return out;
}

template <class F>
struct ReplacementComplex {
  Category category;
  int N = 0;
  int p_max = 0;
  std::shared_ptr<const MorphismIndex> morphisms;
  std::vector<std::vector<std::vector<int>>> chains;  // chains[p][c]: hom ids; p = 0 holds {object}
  std::vector<std::vector<int>> offsets;              // first basis index of each chain
  ChainComplex<F> complex;
  bool braided_shadow = false;
};

namespace detail {

inline void check_replacement_guard(const Algebra& R, Category cat, int N, int p_max, const ReplacementLimits& lim) {
  require(N >= 0 && p_max >= 0, "replacement complex: N and p_max must be >= 0");
  if (lim.unsafe) return;
  if (N > lim.max_N || p_max > lim.max_p)
    throw resource_error("replacement complex: N <= " + std::to_string(lim.max_N) + " and p_max <= " +
                         std::to_string(lim.max_p) + " unless limits are lifted");
  const auto counts = count_chains(cat, N, p_max, R.dim());
  long double total = 0;
  for (auto c : counts.cells) total += c;
  if (total > lim.max_cells)
    throw resource_error("replacement complex: " + std::to_string(static_cast<long long>(total)) +
                         " cells exceed the resource guard");
}

template <class F>
class HomMatrices {
 public:
  HomMatrices(const BarFunctor<F>& B, const MorphismIndex& I) : B_(B), I_(I), cache_(static_cast<std::size_t>(I.size())) {}
  const SparseMatrix<F>& operator()(int id) {
    auto& slot = cache_[static_cast<std::size_t>(id)];
    if (!slot) slot = std::make_unique<SparseMatrix<F>>(B_.map(I_.at(id)));
    return *slot;
  }

 private:
  const BarFunctor<F>& B_;
  const MorphismIndex& I_;
  std::vector<std::unique_ptr<SparseMatrix<F>>> cache_;
};

}  // namespace detail

template <class F>
ReplacementComplex<F> build_replacement_over(const F& field, const Algebra& R, Category cat, int N, int p_max,
                                             const ReplacementLimits& lim = {},
                                             std::shared_ptr<const MorphismIndex> index = nullptr) {
  detail::check_replacement_guard(R, cat, N, p_max, lim);
  if (!index) index = std::make_shared<const MorphismIndex>(cat, N);
  detail::require(index->category() == cat && index->truncation() == N, "replacement complex: index mismatch");
  const MorphismIndex& I = *index;
  const BarFunctor<F> B(field, R, cat);
  detail::HomMatrices<F> mat(B, I);

  std::vector<std::vector<std::vector<int>>> chains(static_cast<std::size_t>(p_max + 1));
  std::vector<std::vector<int>> offsets(static_cast<std::size_t>(p_max + 1));
  std::vector<std::map<std::vector<int>, int>> lookup(static_cast<std::size_t>(p_max + 1));
  std::vector<int> dims;
  auto first_object = [&](int p, const std::vector<int>& c) { return p == 0 ? c[0] : I.source(c[0]); };
  for (int p = 0; p <= p_max; ++p) {
    auto& cs = chains[p];
    if (p == 0) {
      for (int n = 0; n <= N; ++n) cs.push_back({n});
    } else {
      for (const auto& prev : chains[p - 1]) {
        const int last = p == 1 ? prev[0] : I.target(prev.back());
        for (int n = 0; n <= N; ++n)
          for (int h : I.homs(last, n)) {
            std::vector<int> c = p == 1 ? std::vector<int>{} : prev;
            c.push_back(h);
            cs.push_back(std::move(c));
          }
      }
    }
    int off = 0;
    for (std::size_t c = 0; c < cs.size(); ++c) {
      lookup[p].emplace(cs[c], static_cast<int>(c));
      offsets[p].push_back(off);
      off += B.object_dim(first_object(p, cs[c]));
    }
    dims.push_back(off);
  }

  std::vector<SparseMatrix<F>> diffs;
  const auto one = field.one();
  const auto minus = field.neg(one);
  for (int p = 1; p <= p_max; ++p) {
    SparseMatrix<F> d(field, dims[p - 1], dims[p]);
    for (std::size_t c = 0; c < chains[p].size(); ++c) {
      const auto& ch = chains[p][c];
      const int i0 = I.source(ch[0]);
      auto face_offset = [&](int k) {
        std::vector<int> f;
        if (p == 1) {
          f.push_back(k == 0 ? I.target(ch[0]) : i0);
        } else if (k == 0) {
          f.assign(ch.begin() + 1, ch.end());
        } else if (k == p) {
          f.assign(ch.begin(), ch.end() - 1);
        } else {
          f.assign(ch.begin(), ch.begin() + (k - 1));
          f.push_back(I.compose(ch[k], ch[k - 1]));
          f.insert(f.end(), ch.begin() + (k + 1), ch.end());
        }
        return offsets[p - 1][lookup[p - 1].at(f)];
      };
      std::vector<int> face_off(static_cast<std::size_t>(p + 1));
      for (int k = 0; k <= p; ++k) face_off[k] = face_offset(k);
      const auto& push = mat(ch[0]);
      for (int x = 0; x < B.object_dim(i0); ++x) {
        SparseVec<F> col;
        for (const auto& [r, v] : push.column(x)) col.emplace_back(face_off[0] + r, v);
        for (int k = 1; k <= p; ++k) col.emplace_back(face_off[k] + x, k % 2 ? minus : one);
        d.set_column(offsets[p][c] + x, std::move(col));
      }
    }
    diffs.push_back(std::move(d));
  }
  ChainComplex<F> complex(field, dims, std::move(diffs), false);
  complex.check_square_zero();
  return ReplacementComplex<F>{cat, N, p_max, std::move(index), std::move(chains), std::move(offsets), std::move(complex),
                               cat == Category::braided};
}

/// dim H_0 of the replacement complex from the image of the generators:
/// im d_1 is spanned by F(f)x - x for f a face, degeneracy or group generator
/// between objects <= N, since F(gh)x - x = (F(g)y - y) + (F(h)x - x) with y = F(h)x.
template <class F>
int replacement_h0_dim(const F& field, const Algebra& R, Category cat, int N) {
  detail::require(N >= 0, "replacement_h0_dim: N must be >= 0");
  const BarFunctor<F> B(field, R, cat);
  std::vector<int> offset;
  int total = 0;
  for (int n = 0; n <= N; ++n) {
    offset.push_back(total);
    total += B.object_dim(n);
  }
  std::vector<XMorphism> gens;
  for (int n = 1; n <= N; ++n) {
    for (int i = 0; i <= n; ++i) gens.push_back(x_face(cat, i, n));
    for (int i = 0; i < n; ++i) gens.push_back(x_degeneracy(cat, i, n - 1));
    if (cat == Category::cyclic)
      gens.push_back(x_cyclic(n));
    else
      for (int i = 0; i < n; ++i) gens.push_back(x_transposition(cat, i, n));
  }
  EchelonBasis<F> image(field, total);
  for (const auto& g : gens) {
    if (image.full()) break;
    const auto M = B.map(g);
    const int so = offset[g.source_rank()], to = offset[g.target_rank()];
    for (int x = 0; x < M.cols() && !image.full(); ++x) {
      SparseVec<F> col;
      for (const auto& [r, v] : M.column(x)) col.emplace_back(to + r, v);
      col.emplace_back(so + x, field.neg(field.one()));
      normalize(field, col);
      image.insert(col);
    }
  }
  return total - image.rank();
}

struct TruncatedResult {
  Category category = Category::symmetric;
  int degree = 0;
  std::vector<int> Ns;
  std::vector<int> dims;
  std::vector<ChainCounts> counts;
  bool stabilized = false;
  std::string method;
  bool braided_shadow = false;
};

/// H_s of the replacement complex for each N; "stabilized" iff the last two
/// values agree.  Degree 0 uses the generator image, degrees 1 and 2 the full
/// complex up to p = s + 1.
inline TruncatedResult truncated_homology(const Algebra& R, Category cat, int s, const std::vector<int>& Ns,
                                          const ReplacementLimits& lim = {}) {
  detail::require(s >= 0 && s <= 2, "truncated_homology: degree must be 0, 1 or 2");
  detail::require(!Ns.empty(), "truncated_homology: empty truncation list");
  detail::require(R.ring().kind != Ring::Kind::integer, "truncated_homology: coefficients must be a field");
  TruncatedResult out;
  out.category = cat;
  out.degree = s;
  out.Ns = Ns;
  out.braided_shadow = cat == Category::braided;
  out.method = s == 0 ? "generator-image" : "full-replacement";
  for (int N : Ns) {
    detail::require(N >= 0, "truncated_homology: N must be >= 0");
    out.counts.push_back(count_chains(cat, N, s + 1, R.dim()));
    if (s == 0) {
      if (!lim.unsafe && N > lim.max_N) throw resource_error("truncated_homology: N exceeds the resource guard");
      out.dims.push_back(visit_field(R.ring(), [&](const auto& f) { return replacement_h0_dim(f, R, cat, N); }));
    } else {
      out.dims.push_back(visit_field(R.ring(), [&](const auto& f) {
        return build_replacement_over(f, R, cat, N, s + 1, lim).complex.homology(s).dim;
      }));
    }
  }
  out.stabilized = out.dims.size() >= 2 && out.dims[out.dims.size() - 1] == out.dims[out.dims.size() - 2];
  return out;
}

struct ComparisonResult {
  int N = 0;
  int p_max = 0;
  std::vector<int> braid_dims;
  std::vector<int> sym_dims;
  bool commutes = false;
  bool labelwise_surjective = false;
  bool h0_iso = false;
  int h0_braid = 0;
  int h0_sym = 0;
};

/// The chain map induced by sending each braided label to its symmetric image.
template <class F>
ComparisonResult braid_to_sym_comparison_over(const F& field, const Algebra& R, int N, int p_max,
                                              const ReplacementLimits& lim = {}) {
  detail::require(p_max >= 1, "braid_to_sym_comparison: p_max must be >= 1");
  const auto Bc = build_replacement_over(field, R, Category::braided, N, p_max, lim);
  const auto Sc = build_replacement_over(field, R, Category::symmetric, N, p_max, lim);
  const MorphismIndex& IB = *Bc.morphisms;
  const MorphismIndex& IS = *Sc.morphisms;
  std::vector<std::map<std::vector<int>, int>> lookup(static_cast<std::size_t>(p_max + 1));
  for (int p = 0; p <= p_max; ++p)
    for (std::size_t c = 0; c < Sc.chains[p].size(); ++c) lookup[p].emplace(Sc.chains[p][c], static_cast<int>(c));

  ComparisonResult res;
  res.N = N;
  res.p_max = p_max;
  res.labelwise_surjective = true;
  std::vector<SparseMatrix<F>> phi;
  for (int p = 0; p <= p_max; ++p) {
    res.braid_dims.push_back(Bc.complex.dim(p));
    res.sym_dims.push_back(Sc.complex.dim(p));
    SparseMatrix<F> m(field, Sc.complex.dim(p), Bc.complex.dim(p));
    std::vector<bool> hit(Sc.chains[p].size(), false);
    for (std::size_t c = 0; c < Bc.chains[p].size(); ++c) {
      std::vector<int> image;
      if (p == 0)
        image = Bc.chains[p][c];
      else
        for (int h : Bc.chains[p][c]) image.push_back(IS.find(to_symmetric(IB.at(h))));
      const int sc = lookup[p].at(image);
      hit[sc] = true;
      const int first = p == 0 ? image[0] : IS.source(image[0]);
      const int width = static_cast<int>(tensor_dim(R.dim(), first));
      for (int x = 0; x < width; ++x) m.set_column(Bc.offsets[p][c] + x, {{Sc.offsets[p][sc] + x, field.one()}});
    }
    for (bool h : hit) res.labelwise_surjective = res.labelwise_surjective && h;
    phi.push_back(std::move(m));
  }
  res.commutes = true;
  for (int p = 1; p <= p_max; ++p)
    res.commutes = res.commutes && phi[p - 1] * Bc.complex.differential(p) == Sc.complex.differential(p) * phi[p];

  res.h0_braid = Bc.complex.homology(0).dim;
  res.h0_sym = Sc.complex.homology(0).dim;
  // phi_0 induces an isomorphism on H_0 iff it is invertible and carries
  // im d_1 onto im d_1.
  const auto pushed = phi[0] * Bc.complex.differential(1);
  const int r_pushed = rank(pushed);
  const int r_sym = Sc.complex.rank_of(1);
  const int r_both = rank(hconcat(pushed, Sc.complex.differential(1)));
  res.h0_iso = rank(phi[0]) == Sc.complex.dim(0) && Sc.complex.dim(0) == Bc.complex.dim(0) && r_pushed == r_sym &&
               r_both == r_sym;
  return res;
}

inline ComparisonResult braid_to_sym_comparison(const Algebra& R, int N, int p_max, const ReplacementLimits& lim = {}) {
  detail::require(R.ring().kind != Ring::Kind::integer, "braid_to_sym_comparison: coefficients must be a field");
  return visit_field(R.ring(), [&](const auto& f) { return braid_to_sym_comparison_over(f, R, N, p_max, lim); });
}

}  // namespace xsh
