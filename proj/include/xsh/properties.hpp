#pragma once

// Seeded property sweeps shared by the tests and the acceptance suite.  Each
// returns a PropertyReport; a failing instance is recorded, never thrown.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "xsh/bar.hpp"
#include "xsh/braid.hpp"
#include "xsh/crossed.hpp"
#include "xsh/e2op.hpp"
#include "xsh/random.hpp"
#include "xsh/series.hpp"

namespace xsh {

struct PropertyReport {
  std::string name;
  long long trials = 0;
  long long failures = 0;
  std::string first_failure;

  PropertyReport(std::string n = {}) : name(std::move(n)) {}

  bool passed() const noexcept { return trials > 0 && failures == 0; }
  void record(bool ok, const std::function<std::string()>& describe) {
    ++trials;
    if (ok) return;
    if (failures++ == 0) first_failure = describe();
  }
};

/// (f o g) o h = f o (g o h) and the identity laws on seeded triples with
/// ranks in [0, max_rank].
inline PropertyReport check_associativity(Category cat, int trials, std::uint64_t seed, int max_rank = 5) {
  PropertyReport r{"associativity-" + to_string(cat)};
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    const int a = rng.uniform(0, max_rank), b = rng.uniform(0, max_rank), c = rng.uniform(0, max_rank),
              d = rng.uniform(0, max_rank);
    const XMorphism h = random_xmorphism(rng, cat, a, b);
    const XMorphism g = random_xmorphism(rng, cat, b, c);
    const XMorphism f = random_xmorphism(rng, cat, c, d);
    const bool ok = xequal(xcompose(xcompose(f, g), h), xcompose(f, xcompose(g, h))) &&
                    xequal(xcompose(XMorphism::identity(cat, d), f), f) &&
                    xequal(xcompose(f, XMorphism::identity(cat, c)), f);
    r.record(ok, [&] { return "f=" + to_string(f) + " g=" + to_string(g) + " h=" + to_string(h); });
  }
  return r;
}

/// factorize(f) recomposes to f.
inline PropertyReport check_factorization(Category cat, int trials, std::uint64_t seed, int max_rank = 5) {
  PropertyReport r{"factorization-" + to_string(cat)};
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    const XMorphism f = random_xmorphism(rng, cat, rng.uniform(0, max_rank), rng.uniform(0, max_rank));
    const Factorization fa = factorize(f);
    const bool ok = xequal(xcompose(fa.delta, fa.group), f) && fa.group.delta() == OrdinalMap::identity(f.source_rank());
    r.record(ok, [&] { return "f=" + to_string(f); });
  }
  return r;
}

/// to_symmetric(f o g) = to_symmetric(f) o to_symmetric(g).
inline PropertyReport check_projection_functor(int trials, std::uint64_t seed, int max_rank = 5) {
  PropertyReport r{"to-symmetric-functoriality"};
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    const int a = rng.uniform(0, max_rank), b = rng.uniform(0, max_rank), c = rng.uniform(0, max_rank);
    const XMorphism g = random_xmorphism(rng, Category::braided, a, b);
    const XMorphism f = random_xmorphism(rng, Category::braided, b, c);
    const bool ok = xequal(to_symmetric(xcompose(f, g)), xcompose(to_symmetric(f), to_symmetric(g)));
    r.record(ok, [&] { return "f=" + to_string(f) + " g=" + to_string(g); });
  }
  return r;
}

/// B(f o g) = B(f) B(g), and the generator route agrees with the direct one.
template <class F>
PropertyReport check_functoriality(const BarFunctor<F>& B, int trials, std::uint64_t seed, int max_rank = 4) {
  PropertyReport r{"bar-functoriality-" + to_string(B.category())};
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    const int a = rng.uniform(0, max_rank), b = rng.uniform(0, max_rank), c = rng.uniform(0, max_rank);
    const XMorphism g = random_xmorphism(rng, B.category(), a, b);
    const XMorphism f = random_xmorphism(rng, B.category(), b, c);
    const XMorphism fg = xcompose(f, g);
    const bool ok = B.map(fg) == B.map(f) * B.map(g) && B.map(fg) == B.matrix_direct(fg);
    r.record(ok, [&] { return "f=" + to_string(f) + " g=" + to_string(g); });
  }
  return r;
}

/// Projection of a cabled braid is the block expansion of the projection, and
/// its exponent sum counts each crossing once per pair of cabled strands.
inline PropertyReport check_cable_contracts(int trials, std::uint64_t seed) {
  PropertyReport r{"cable-contracts"};
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    const int n = rng.uniform(0, 4), m = rng.uniform(0, 5);
    const OrdinalMap phi = random_ordinal_map(rng, m, n);
    const Braid b = random_braid(rng, n + 1, 8);
    const Braid c = cable(phi, b);
    const auto bottom = phi.fiber_sizes();
    const Permutation pi = project(b);
    std::vector<int> top(bottom.size());
    for (int p = 0; p < b.strands(); ++p) top[p] = bottom[pi(p)];
    long long expected = 0;
    std::vector<int> cur(bottom.begin(), bottom.end());
    for (int g : b.word()) {
      const int i = std::abs(g);
      expected += (g > 0 ? 1 : -1) * static_cast<long long>(cur[i - 1]) * cur[i];
      std::swap(cur[i - 1], cur[i]);
    }
    const bool ok = project(c) == block_perm(pi, top) && c.exponent_sum() == expected;
    r.record(ok, [&] { return "phi=" + to_literal(phi) + " b=" + to_string(b); });
  }
  return r;
}

namespace detail {

inline void compositions(int total, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (total == 0) {
    if (!cur.empty()) out.push_back(cur);
    return;
  }
  for (int k = 1; k <= total; ++k) {
    cur.push_back(k);
    compositions(total - k, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

/// Associativity, unit laws and the target contract of e2_compose_morphisms
/// for every two-level pattern outer(n) <- inners(j_1..j_n) <- leaves(k_...)
/// with all arities >= 1 and total leaf count <= max_total, `per_pattern`
/// seeded instances each.
inline PropertyReport check_e2_patterns(int max_total, int per_pattern, std::uint64_t seed) {
  PropertyReport r{"e2-operad-laws"};
  Rng rng(seed);
  for (int K = 1; K <= max_total; ++K) {
    std::vector<std::vector<int>> leaf_patterns;
    std::vector<int> cur;
    detail::compositions(K, cur, leaf_patterns);
    for (const auto& ks : leaf_patterns) {
      // Group the leaf list ks into consecutive runs: run sizes are the j's.
      const int J = static_cast<int>(ks.size());
      std::vector<std::vector<int>> js;
      detail::compositions(J, cur, js);
      for (const auto& j : js) {
        const int n = static_cast<int>(j.size());
        for (int rep = 0; rep < per_pattern; ++rep) {
          const E2Morphism outer = random_e2(rng, n);
          std::vector<E2Morphism> inners, leaves;
          std::vector<std::vector<E2Morphism>> grouped(static_cast<std::size_t>(n));
          for (int i = 0; i < n; ++i) inners.push_back(random_e2(rng, j[i]));
          int at = 0;
          for (int i = 0; i < n; ++i)
            for (int a = 0; a < j[i]; ++a) {
              leaves.push_back(random_e2(rng, ks[at++]));
              grouped[i].push_back(leaves.back());
            }
          const E2Morphism mid = e2_compose_morphisms(outer, inners);
          const E2Morphism lhs = e2_compose_morphisms(mid, leaves);
          std::vector<E2Morphism> mids;
          for (int i = 0; i < n; ++i) mids.push_back(e2_compose_morphisms(inners[i], grouped[i]));
          const E2Morphism rhs = e2_compose_morphisms(outer, mids);
          bool ok = lhs.source() == rhs.source() && braid_eq(lhs.braid(), rhs.braid());
          // Units: the identity of arity 1 on either side.
          const E2Morphism unit = E2Morphism::identity(Permutation::identity(1));
          const E2Morphism left = e2_compose_morphisms(unit, {outer});
          const E2Morphism right = e2_compose_morphisms(outer, std::vector<E2Morphism>(static_cast<std::size_t>(n), unit));
          ok = ok && left.source() == outer.source() && braid_eq(left.braid(), outer.braid());
          ok = ok && right.source() == outer.source() && braid_eq(right.braid(), outer.braid());
          std::vector<Permutation> targets;
          for (const auto& g : inners) targets.push_back(g.target());
          ok = ok && mid.target() == e2_compose_objects(outer.target(), targets);
          r.record(ok, [&] {
            std::string s = "outer=" + to_string(outer.source()) + "," + to_string(outer.braid()) + " j=";
            for (int x : j) s += std::to_string(x) + " ";
            return s;
          });
        }
      }
    }
  }
  return r;
}

/// cyclic_duality(f o g) = cyclic_duality(g) o cyclic_duality(f).
inline PropertyReport check_duality_functoriality(int trials, std::uint64_t seed, int max_rank = 5) {
  PropertyReport r{"cyclic-duality-functoriality"};
  Rng rng(seed);
  const Category C = Category::cyclic;
  for (int t = 0; t < trials; ++t) {
    const int a = rng.uniform(0, max_rank), b = rng.uniform(0, max_rank), c = rng.uniform(0, max_rank);
    const XMorphism g = random_xmorphism(rng, C, a, b);
    const XMorphism f = random_xmorphism(rng, C, b, c);
    const bool ok = xequal(cyclic_duality(xcompose(f, g)), xcompose(cyclic_duality(g), cyclic_duality(f)));
    r.record(ok, [&] { return "f=" + to_string(f) + " g=" + to_string(g); });
  }
  return r;
}

/// The generator table of the duality for ranks up to max_rank.
inline PropertyReport check_duality_table(int max_rank) {
  PropertyReport r{"cyclic-duality-table"};
  const Category C = Category::cyclic;
  for (int n = 1; n <= max_rank; ++n) {
    for (int i = 0; i <= n; ++i) {
      const XMorphism expected = i < n ? x_degeneracy(C, i, n - 1)
                                       : xcompose(x_degeneracy(C, 0, n - 1), x_cyclic(n, true));
      r.record(xequal(cyclic_duality(x_face(C, i, n)), expected),
               [&] { return "face " + std::to_string(i) + " rank " + std::to_string(n); });
    }
    for (int i = 0; i < n; ++i)
      r.record(xequal(cyclic_duality(x_degeneracy(C, i, n - 1)), x_face(C, i + 1, n)),
               [&] { return "degeneracy " + std::to_string(i) + " rank " + std::to_string(n); });
    r.record(xequal(cyclic_duality(x_cyclic(n)), x_cyclic(n, true)), [&] { return "t rank " + std::to_string(n); });
  }
  return r;
}

/// Cyclic bar faces from the formula and through the duality agree.
template <class F>
PropertyReport check_cyclic_face_routes(const BarFunctor<F>& B, int n_max) {
  PropertyReport r{"cyclic-face-routes"};
  for (int n = 1; n <= n_max; ++n)
    for (int i = 0; i <= n; ++i)
      r.record(cyclic_bar_face(B, n, i) == cyclic_bar_face_via_duality(B, n, i),
               [&] { return "d" + std::to_string(i) + " on rank " + std::to_string(n); });
  return r;
}

/// split_quotient(total, factor) * factor = total on seeded pairs built as
/// products, so the quotient exists with nonnegative coefficients.
inline PropertyReport check_series_roundtrip(int trials, std::uint64_t seed, int dmax = 12) {
  PropertyReport r{"split-quotient-roundtrip"};
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    const PoincareSeries q = random_series(rng, 2, dmax, 5, rng.coin());
    const PoincareSeries factor = random_series(rng, 2, dmax, 5, true);
    const PoincareSeries total = multiply(q, factor);
    bool ok = false;
    try {
      const PoincareSeries back = split_quotient(total, factor);
      ok = back == q && multiply(back, factor) == total;
    } catch (const std::exception&) {
      ok = false;
    }
    r.record(ok, [&] { return "factor=" + to_string(factor) + " total=" + to_string(total); });
  }
  return r;
}

}  // namespace xsh
