#pragma once

// Morphisms of the cyclic, symmetric and braided crossed simplicial
// categories.  A morphism [m] -> [n] is a pair (phi, g) with phi : [m] -> [n]
// order preserving and g an element of the group attached to [m].
//
// Storage convention.  The stored permutation gamma is the group coordinate of
// the pair, composed by
//     (phi, gamma) o (psi, tau) = (phi o gamma^*psi, tau o psi^*gamma)
// with o honest composition of functions.  The underlying map of finite sets
// is phi o gamma^{-1}, and the fiber over k, read in order, is
// gamma(i) for i in phi^{-1}(k) ascending.  On the bar construction the pair
// (id, gamma) puts r_{gamma(k)} in slot k, so gamma is the inverse of the
// permutation g in "r_{g^{-1}(0)} (x) ... (x) r_{g^{-1}(n)}".
//
// For the braided category the group coordinate is a braid b; the set-level
// shadow is project(b) and composition uses the word b_tau . cable(psi, b_gamma)
// (lower factor first), which projects to tau o psi^*gamma.

#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "xsh/braid.hpp"
#include "xsh/error.hpp"
#include "xsh/ordinal.hpp"
#include "xsh/permutation.hpp"

namespace xsh {

enum class Category { cyclic, symmetric, braided };

inline std::string to_string(Category c) {
  switch (c) {
    case Category::cyclic: return "cyc";
    case Category::symmetric: return "sym";
    case Category::braided: return "braid";
  }
  return "?";
}

inline Category parse_category(std::string_view s) {
  if (s == "cyc" || s == "cyclic") return Category::cyclic;
  if (s == "sym" || s == "symmetric") return Category::symmetric;
  if (s == "braid" || s == "braided") return Category::braided;
  throw parse_error("unknown category '" + std::string(s) + "' (expected cyc, sym or braid)");
}

/// True when p is a power of j -> j+1 mod n.
inline bool is_cyclic_power(const Permutation& p) {
  const int n = p.size();
  if (n == 0) return true;
  for (int i = 0; i < n; ++i)
    if (p(i) != (i + p(0)) % n) return false;
  return true;
}

class XMorphism {
 public:
  using Group = std::variant<Permutation, Braid>;

  XMorphism(Category cat, OrdinalMap delta, Group group)
      : cat_(cat), delta_(std::move(delta)), group_(std::move(group)) {
    const int strands = delta_.source_rank() + 1;
    if (cat_ == Category::braided) {
      detail::require(std::holds_alternative<Braid>(group_), "braided morphism needs a braid group part");
      detail::require(std::get<Braid>(group_).strands() == strands, "braid strand count must be source_rank+1");
    } else {
      detail::require(std::holds_alternative<Permutation>(group_), "cyclic/symmetric morphism needs a permutation");
      const auto& p = std::get<Permutation>(group_);
      detail::require(p.size() == strands, "permutation size must be source_rank+1");
      if (cat_ == Category::cyclic) detail::require(is_cyclic_power(p), "cyclic group part must be a power of t_n");
    }
  }

  static XMorphism identity(Category cat, int rank) {
    return XMorphism(cat, OrdinalMap::identity(rank), trivial_group(cat, rank + 1));
  }

  static XMorphism from_delta(Category cat, OrdinalMap phi) {
    const int strands = phi.source_rank() + 1;
    return XMorphism(cat, std::move(phi), trivial_group(cat, strands));
  }

  static Group trivial_group(Category cat, int strands) {
    if (cat == Category::braided) return Braid::identity(strands);
    return Permutation::identity(strands);
  }

  Category category() const noexcept { return cat_; }
  int source_rank() const noexcept { return delta_.source_rank(); }
  int target_rank() const noexcept { return delta_.target_rank(); }
  const OrdinalMap& delta() const noexcept { return delta_; }
  const Group& group() const noexcept { return group_; }

  bool is_braided() const noexcept { return cat_ == Category::braided; }
  const Braid& braid() const { return std::get<Braid>(group_); }

  /// The permutation coordinate (projected for braids).
  Permutation permutation() const {
    if (is_braided()) return project(braid());
    return std::get<Permutation>(group_);
  }

 private:
  Category cat_;
  OrdinalMap delta_;
  Group group_;
};

/// f o g.
inline XMorphism xcompose(const XMorphism& f, const XMorphism& g) {
  detail::require(f.category() == g.category(), "xcompose: category mismatch");
  detail::require(g.target_rank() == f.source_rank(), "xcompose: rank mismatch");
  const Permutation gamma = f.permutation();
  const OrdinalMap& psi = g.delta();
  OrdinalMap delta = compose(f.delta(), perm_star_ordinal(gamma, psi));
  if (f.is_braided()) return XMorphism(Category::braided, std::move(delta), g.braid() * cable(psi, f.braid()));
  Permutation group = perm_compose(std::get<Permutation>(g.group()), ordinal_star_perm(psi, gamma));
  return XMorphism(f.category(), std::move(delta), std::move(group));
}

/// Equality; braids are compared in the group.
inline bool xequal(const XMorphism& a, const XMorphism& b) {
  if (a.category() != b.category() || a.delta() != b.delta()) return false;
  if (a.is_braided()) return braid_eq(a.braid(), b.braid());
  return std::get<Permutation>(a.group()) == std::get<Permutation>(b.group());
}

struct Factorization {
  XMorphism group;  // (id, g)
  XMorphism delta;  // (phi, e)
};

/// f = (phi, e) o (id, g).
inline Factorization factorize(const XMorphism& f) {
  const int m = f.source_rank();
  return {XMorphism(f.category(), OrdinalMap::identity(m), f.group()), XMorphism::from_delta(f.category(), f.delta())};
}

// Generators.  Faces and degeneracies carry the trivial group element.

inline XMorphism x_face(Category cat, int i, int n) { return XMorphism::from_delta(cat, face(i, n)); }
inline XMorphism x_degeneracy(Category cat, int i, int n) { return XMorphism::from_delta(cat, degeneracy(i, n)); }

/// t^i_n on [n]: the transposition of i and i+1, or the elementary braid in
/// which strand i crosses over strand i+1.
inline XMorphism x_transposition(Category cat, int i, int n, bool inverse = false) {
  detail::require(cat != Category::cyclic, "t^i_n is not a morphism of the cyclic category");
  detail::require(i >= 0 && i < n, "t^i_n needs 0 <= i < n");
  if (cat == Category::braided) return XMorphism(cat, OrdinalMap::identity(n), Braid::generator(n + 1, i + 1, inverse));
  return XMorphism(cat, OrdinalMap::identity(n), Permutation::transposition(n + 1, i, i + 1));
}

/// t_n on [n], the generator of C_{n+1}: stored as j -> j+1, so its
/// underlying map of sets is j -> j-1.
inline XMorphism x_cyclic(int n, bool inverse = false) {
  const Permutation c = Permutation::rotation(n + 1);
  return XMorphism(Category::cyclic, OrdinalMap::identity(n), inverse ? perm_inverse(c) : c);
}

/// Embed a cyclic morphism into the symmetric category.
inline XMorphism cyclic_to_symmetric(const XMorphism& f) {
  detail::require(f.category() == Category::cyclic, "cyclic_to_symmetric: need a cyclic morphism");
  return XMorphism(Category::symmetric, f.delta(), f.group());
}

/// The functor to the symmetric category, projecting braids to permutations.
inline XMorphism to_symmetric(const XMorphism& f) {
  detail::require(f.is_braided(), "to_symmetric: need a braided morphism");
  return XMorphism(Category::symmetric, f.delta(), project(f.braid()));
}

// Generator words: "d1 t0 s2", leftmost factor applied last.  Tokens:
//   d<i>, s<i>      faces and degeneracies
//   t<i>, t<i>^-1   t^i (symmetric, braided)
//   t, t^-1         t_n (cyclic)
//   id

inline XMorphism parse_xword(Category cat, std::string_view text, int source_rank) {
  std::istringstream is{std::string(text)};
  std::vector<std::string> toks;
  for (std::string tok; is >> tok;) toks.push_back(tok);
  XMorphism acc = XMorphism::identity(cat, source_rank);
  auto index_of = [](const std::string& tok, std::string_view body) {
    try {
      std::size_t used = 0;
      const int i = std::stoi(std::string(body), &used);
      if (used != body.size()) throw parse_error("bad index in '" + tok + "'");
      return i;
    } catch (const std::logic_error&) {
      throw parse_error("bad index in '" + tok + "'");
    }
  };
  for (auto it = toks.rbegin(); it != toks.rend(); ++it) {
    const std::string& tok = *it;
    if (tok == "id") continue;
    const int r = acc.target_rank();
    try {
      if (tok[0] == 'd' && tok.size() > 1) {
        acc = xcompose(x_face(cat, index_of(tok, std::string_view(tok).substr(1)), r + 1), acc);
      } else if (tok[0] == 's' && tok.size() > 1) {
        acc = xcompose(x_degeneracy(cat, index_of(tok, std::string_view(tok).substr(1)), r - 1), acc);
      } else if (tok == "t" || tok == "t^-1") {
        if (cat != Category::cyclic) throw parse_error("bare t is the cyclic generator; use t<i> here");
        acc = xcompose(x_cyclic(r, tok != "t"), acc);
      } else if (tok[0] == 't') {
        std::string_view body = std::string_view(tok).substr(1);
        bool inv = false;
        if (body.size() > 3 && body.substr(body.size() - 3) == "^-1") {
          inv = true;
          body = body.substr(0, body.size() - 3);
        }
        acc = xcompose(x_transposition(cat, index_of(tok, body), r, inv), acc);
      } else {
        throw parse_error("bad generator token '" + tok + "'");
      }
    } catch (const argument_error& e) {
      throw parse_error("generator '" + tok + "' does not apply: " + e.what());
    }
  }
  return acc;
}

inline std::string to_string(const XMorphism& f) {
  std::ostringstream os;
  os << to_string(f.category()) << ' ' << f.source_rank() << "->" << f.target_rank() << ' ' << to_literal(f.delta()) << ' ';
  if (f.is_braided())
    os << to_string(f.braid());
  else
    os << to_string(std::get<Permutation>(f.group()));
  return os.str();
}

/// The duality of the cyclic category, contravariant and the identity on
/// objects.  Generators go by
///   delta^i_n -> sigma^i_{n-1} (i < n),  delta^n_n -> sigma^0 t_n^{-1},
///   sigma^i_n -> delta^{i+1}_{n+1},      t_n -> t_n^{-1},
/// and a general morphism is handled through its factorization
/// (phi, e) o (id, c^k) with phi in normal form.
inline XMorphism cyclic_duality(const XMorphism& f) {
  detail::require(f.category() == Category::cyclic, "cyclic_duality: need a cyclic morphism");
  detail::require(f.source_rank() >= 0, "cyclic_duality: augmented objects are not in the cyclic category");
  const Category C = Category::cyclic;
  const int m = f.source_rank();
  // I(id, gamma) = (id, gamma^{-1}) since gamma is a power of the generator.
  const XMorphism group_dual(C, OrdinalMap::identity(m), perm_inverse(std::get<Permutation>(f.group())));
  // f = d_{i1} ... d_{is} s_{j1} ... s_{jt} (id, gamma); dualize in reverse.
  const NormalForm nf = normal_form(f.delta());
  XMorphism acc = XMorphism::identity(C, f.target_rank());
  int rank = f.target_rank();
  for (int i : nf.faces) {  // leftmost face first: it is applied last by f
    const XMorphism dual = i < rank ? x_degeneracy(C, i, rank - 1)
                                    : xcompose(x_degeneracy(C, 0, rank - 1), x_cyclic(rank, true));
    acc = xcompose(dual, acc);
    --rank;
  }
  // The k-th degeneracy from the left is sigma^{j_k} : [m-t+k+1] -> [m-t+k];
  // its dual delta^{j_k+1} is applied in left to right order.
  const int t = static_cast<int>(nf.degeneracies.size());
  for (int k = 0; k < t; ++k) acc = xcompose(x_face(C, nf.degeneracies[k] + 1, m - t + k + 1), acc);
  return xcompose(group_dual, acc);
}

}  // namespace xsh
