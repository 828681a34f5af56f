#pragma once

// Seeded generators for property sweeps.  Bounded draws use plain modular
// reduction of mt19937_64 output so that a seed gives the same stream on every
// standard library.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "xsh/braid.hpp"
#include "xsh/crossed.hpp"
#include "xsh/e2op.hpp"
#include "xsh/ordinal.hpp"
#include "xsh/permutation.hpp"
#include "xsh/series.hpp"

namespace xsh {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [lo, hi] up to a negligible modulo bias.
  int uniform(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(engine_() % span);
  }
  bool coin() { return (engine_() >> 11) & 1u; }
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

inline OrdinalMap random_ordinal_map(Rng& rng, int m, int n) {
  std::vector<int> v(static_cast<std::size_t>(m + 1));
  for (auto& x : v) x = rng.uniform(0, n);
  std::sort(v.begin(), v.end());
  return OrdinalMap(m, n, std::move(v));
}

inline Permutation random_permutation(Rng& rng, int size) {
  std::vector<int> v(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) v[i] = i;
  for (int i = size - 1; i > 0; --i) std::swap(v[i], v[rng.uniform(0, i)]);
  return Permutation(std::move(v));
}

inline Braid random_braid(Rng& rng, int strands, int max_length) {
  std::vector<int> w;
  if (strands >= 2)
    for (int k = rng.uniform(0, max_length); k > 0; --k) {
      const int g = rng.uniform(1, strands - 1);
      w.push_back(rng.coin() ? g : -g);
    }
  return Braid(strands, std::move(w));
}

/// A random morphism [m] -> [n]; braided group parts are words of length at
/// most max_length.
inline XMorphism random_xmorphism(Rng& rng, Category cat, int m, int n, int max_length = 6) {
  OrdinalMap phi = random_ordinal_map(rng, m, n);
  switch (cat) {
    case Category::cyclic: {
      Permutation c = Permutation::identity(m + 1);
      for (int k = rng.uniform(0, m); k > 0; --k) c = perm_compose(Permutation::rotation(m + 1), c);
      return XMorphism(cat, std::move(phi), std::move(c));
    }
    case Category::symmetric:
      return XMorphism(cat, std::move(phi), random_permutation(rng, m + 1));
    case Category::braided:
      return XMorphism(cat, std::move(phi), random_braid(rng, m + 1, max_length));
  }
  return XMorphism::identity(cat, m);
}

inline E2Morphism random_e2(Rng& rng, int arity, int max_length = 5) {
  return E2Morphism(random_permutation(rng, arity), random_braid(rng, arity, max_length));
}

/// Coefficients in [0, max_coeff]; constant term forced to 1 when `unital`.
inline PoincareSeries random_series(Rng& rng, std::uint32_t p, int dmax, int max_coeff, bool unital) {
  std::vector<mpz_class> c(static_cast<std::size_t>(dmax + 1));
  for (auto& x : c) x = rng.uniform(0, max_coeff);
  if (unital) c[0] = 1;
  return PoincareSeries(p, dmax, std::move(c));
}

}  // namespace xsh
