#pragma once

// The groupoid operad Sigma_n // B_n: objects are permutations, a morphism
// sigma -> project(b) o sigma is a braid b.  Also the braided monoidal
// structure on the augmented braided category (block braidings against
// disjoint union) and the composition rule of its envelope.

#include <string>
#include <vector>

#include "xsh/braid.hpp"
#include "xsh/crossed.hpp"
#include "xsh/error.hpp"
#include "xsh/ordinal.hpp"
#include "xsh/permutation.hpp"

namespace xsh {

class E2Morphism {
 public:
  E2Morphism(Permutation source, Braid braid) : source_(std::move(source)), braid_(std::move(braid)) {
    detail::require(source_.size() == braid_.strands(), "E2 morphism: braid strand count must equal arity");
  }

  static E2Morphism identity(const Permutation& sigma) { return E2Morphism(sigma, Braid::identity(sigma.size())); }

  int arity() const noexcept { return source_.size(); }
  const Permutation& source() const noexcept { return source_; }
  const Braid& braid() const noexcept { return braid_; }
  Permutation target() const { return perm_compose(project(braid_), source_); }

 private:
  Permutation source_;
  Braid braid_;
};

/// sigma(j_1, ..., j_n) o (tau_1 + ... + tau_n).
inline Permutation e2_compose_objects(const Permutation& sigma, const std::vector<Permutation>& taus) {
  detail::require(static_cast<int>(taus.size()) == sigma.size(), "e2_compose_objects: need one permutation per input");
  std::vector<int> sizes;
  for (const auto& t : taus) sizes.push_back(t.size());
  return perm_compose(block_perm(sigma, sizes), direct_sum(std::span<const Permutation>(taus)));
}

/// Operad composition.  The braid is omega(b, b_{sigma^{-1}(1)}, ...): the
/// inner braid of input sigma^{-1}(p) is substituted for the strand at
/// position p.
inline E2Morphism e2_compose_morphisms(const E2Morphism& outer, const std::vector<E2Morphism>& inners) {
  const int n = outer.arity();
  detail::require(static_cast<int>(inners.size()) == n, "e2_compose_morphisms: need one inner morphism per input");
  std::vector<Permutation> sources;
  for (const auto& g : inners) sources.push_back(g.source());
  const Permutation inv = perm_inverse(outer.source());
  std::vector<Braid> subs;
  for (int p = 0; p < n; ++p) subs.push_back(inners[inv(p)].braid());
  return E2Morphism(e2_compose_objects(outer.source(), sources), omega(outer.braid(), subs));
}

/// Morphisms of the augmented braided category as (phi, b) pairs in the
/// <n> = [n-1] convention; rank -1 is the monoidal unit.
struct EnvelopeMorphism {
  OrdinalMap phi;
  Braid braid;
};

/// (phi', b') o (phi, b) = (phi' o b'^*phi, phi^*(b') b), the product of braids
/// read with b applied first.
inline EnvelopeMorphism envelope_compose(const EnvelopeMorphism& f, const EnvelopeMorphism& g) {
  detail::require(g.phi.target_rank() == f.phi.source_rank(), "envelope_compose: ranks do not compose");
  detail::require(f.braid.strands() == f.phi.source_rank() + 1 && g.braid.strands() == g.phi.source_rank() + 1,
                  "envelope_compose: braid strand counts must match sources");
  OrdinalMap phi = compose(f.phi, perm_star_ordinal(project(f.braid), g.phi));
  return {std::move(phi), g.braid * cable(g.phi, f.braid)};
}

inline XMorphism to_xmorphism(const EnvelopeMorphism& f) { return XMorphism(Category::braided, f.phi, f.braid); }

/// f + g: f on the left block, g on the right block.
inline XMorphism disjoint_union(const XMorphism& f, const XMorphism& g) {
  detail::require(f.is_braided() && g.is_braided(), "disjoint_union: braided morphisms expected");
  return XMorphism(Category::braided, join(f.delta(), g.delta()), braid_sum(f.braid(), g.braid()));
}

/// b_{n,m} as an automorphism of <n+m>.
inline XMorphism braiding_morphism(int n, int m) {
  return XMorphism(Category::braided, OrdinalMap::identity(n + m - 1), braiding(n, m));
}

struct MonoidalCheck {
  std::string kind;      // hexagon_left, hexagon_right, naturality
  std::string instance;
  bool passed = false;
};

namespace detail {

/// Generators of the augmented braided category with source and target
/// sizes at most `limit` (sizes count strands), plus identities.
inline std::vector<XMorphism> small_braided_generators(int limit) {
  const Category B = Category::braided;
  std::vector<XMorphism> out;
  for (int size = 0; size <= limit; ++size) out.push_back(XMorphism::identity(B, size - 1));
  for (int size = 1; size <= limit; ++size) {
    const int n = size - 1;
    for (int i = 0; i <= n && n >= 1; ++i) out.push_back(x_face(B, i, n));
    for (int i = 0; i <= n && n + 1 < limit; ++i) out.push_back(x_degeneracy(B, i, n));
    for (int i = 0; i < n; ++i) {
      out.push_back(x_transposition(B, i, n));
      out.push_back(x_transposition(B, i, n, true));
    }
  }
  // The unique map from the unit <0> into <1>.
  if (limit >= 1) out.push_back(XMorphism::from_delta(B, OrdinalMap::from_empty(0)));
  return out;
}

}  // namespace detail

/// Both hexagon identities for n, m, p <= limit, and naturality of b_{n,m}
/// against f + g for generator pairs f, g with sizes <= limit.
inline std::vector<MonoidalCheck> check_braided_monoidal(int limit) {
  detail::require(limit >= 0 && limit <= 4, "check_braided_monoidal: need 0 <= limit <= 4");
  std::vector<MonoidalCheck> out;
  auto id = [](int k) { return Braid::identity(k); };
  for (int n = 0; n <= limit; ++n)
    for (int m = 0; m <= limit; ++m)
      for (int p = 0; p <= limit; ++p) {
        const std::string inst = "n=" + std::to_string(n) + " m=" + std::to_string(m) + " p=" + std::to_string(p);
        // Block n+m crossing p: first m crosses p, then n does.
        const Braid left = braid_sum(id(n), braiding(m, p)) * braid_sum(braiding(n, p), id(m));
        out.push_back({"hexagon_left", inst, braid_eq(braiding(n + m, p), left)});
        // Block n crossing m+p: first m, then p.
        const Braid right = braid_sum(braiding(n, m), id(p)) * braid_sum(id(m), braiding(n, p));
        out.push_back({"hexagon_right", inst, braid_eq(braiding(n, m + p), right)});
      }
  const auto gens = detail::small_braided_generators(limit);
  for (const auto& f : gens)
    for (const auto& g : gens) {
      const int n = f.source_rank() + 1, m = g.source_rank() + 1;
      const int n2 = f.target_rank() + 1, m2 = g.target_rank() + 1;
      const XMorphism lhs = xcompose(braiding_morphism(n2, m2), disjoint_union(f, g));
      const XMorphism rhs = xcompose(disjoint_union(g, f), braiding_morphism(n, m));
      out.push_back({"naturality", "f=" + to_string(f) + " g=" + to_string(g), xequal(lhs, rhs)});
    }
  return out;
}

}  // namespace xsh
