#pragma once

// Exhaustive instantiation of the defining relations of the cyclic, symmetric
// and braided categories.  Each instance is checked twice: as an equality of
// composed morphisms, and as an equality of bar-construction matrices on the
// dual numbers over Q.

#include <string>
#include <vector>

#include "xsh/algebra.hpp"
#include "xsh/bar.hpp"
#include "xsh/crossed.hpp"
#include "xsh/parallel.hpp"

namespace xsh {

struct RelationCheck {
  std::string relation;
  std::string instance;  // "n=3 i=0 j=2: t0 d2 = d2 t0"
  bool morphisms_ok = false;
  bool matrices_ok = false;
  bool passed() const noexcept { return morphisms_ok && matrices_ok; }
  std::string status() const { return passed() ? "pass" : "fail"; }
};

namespace detail {

struct RelationSpec {
  std::string relation;
  std::string params;
  std::string lhs, rhs;
  int source_rank;
  bool expect_equal = true;  // false for t^i t^i in the braided category
};

inline std::string rep(const std::string& tok, int times) {
  std::string s;
  for (int k = 0; k < times; ++k) s += (k ? " " : "") + tok;
  return s;
}

inline std::vector<RelationSpec> relation_specs(Category cat, int n_max) {
  using std::to_string;
  std::vector<RelationSpec> out;
  auto P = [](int n, int i, int j) {
    std::string s = "n=" + std::to_string(n) + " i=" + std::to_string(i);
    if (j >= 0) s += " j=" + std::to_string(j);
    return s;
  };
  auto d = [](int i) { return "d" + std::to_string(i); };
  auto s = [](int i) { return "s" + std::to_string(i); };
  auto t = [](int i) { return "t" + std::to_string(i); };

  // Cosimplicial identities.
  for (int n = 2; n <= n_max; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i < j; ++i) out.push_back({"coface", P(n, i, j), d(j) + " " + d(i), d(i) + " " + d(j - 1), n - 2});
  for (int n = 0; n + 2 <= n_max; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= j; ++i)
        out.push_back({"codegeneracy", P(n, i, j), s(j) + " " + s(i), s(i) + " " + s(j + 1), n + 2});
  for (int n = 0; n + 1 <= n_max; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= n + 1; ++i) {
        std::string rhs;
        if (i < j)
          rhs = d(i) + " " + s(j - 1);
        else if (i == j || i == j + 1)
          rhs = "id";
        else
          rhs = d(i - 1) + " " + s(j);
        out.push_back({"codegeneracy_coface", P(n, i, j), s(j) + " " + d(i), rhs, n});
      }

  if (cat == Category::cyclic) {
    for (int n = 0; n <= n_max; ++n) out.push_back({"cyclic_order", "n=" + to_string(n), rep("t", n + 1), "id", n});
    for (int n = 1; n <= n_max; ++n)
      for (int i = 0; i <= n; ++i)
        out.push_back({"cyclic_coface", P(n, i, -1), "t " + d(i), i == 0 ? d(n) : d(i - 1) + " t", n - 1});
    for (int n = 0; n + 1 <= n_max; ++n)
      for (int i = 0; i <= n; ++i)
        out.push_back({"cyclic_codegeneracy", P(n, i, -1), "t " + s(i), i == 0 ? s(n) + " t t" : s(i - 1) + " t", n + 1});
    return out;
  }

  const bool braided = cat == Category::braided;
  for (int n = 1; n <= n_max; ++n)
    for (int i = 0; i < n; ++i) {
      if (braided)
        out.push_back({"square_not_identity", P(n, i, -1), t(i) + " " + t(i), "id", n, false});
      else
        out.push_back({"involution", P(n, i, -1), t(i) + " " + t(i), "id", n});
      out.push_back({"inverse", P(n, i, -1), t(i) + " " + t(i) + "^-1", "id", n});
      if (i + 1 < n)
        out.push_back({"braid", P(n, i, -1), t(i) + " " + t(i + 1) + " " + t(i), t(i + 1) + " " + t(i) + " " + t(i + 1), n});
      for (int j = i + 2; j < n; ++j) out.push_back({"far_commutation", P(n, i, j), t(i) + " " + t(j), t(j) + " " + t(i), n});
    }
  for (int n = 1; n <= n_max; ++n)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j <= n; ++j) {
        std::string rhs;
        if (i < j - 1)
          rhs = d(j) + " " + t(i);
        else if (i == j - 1)
          rhs = d(i);
        else if (i == j)
          rhs = d(i + 1);
        else
          rhs = d(j) + " " + t(i - 1);
        out.push_back({"mixed_coface", P(n, i, j), t(i) + " " + d(j), rhs, n - 1});
      }
  for (int n = 1; n + 1 <= n_max; ++n)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j <= n; ++j) {
        std::string rhs;
        if (i < j - 1)
          rhs = s(j) + " " + t(i);
        else if (i == j - 1)
          rhs = s(i) + " " + t(i + 1) + " " + t(i);
        else if (i == j)
          rhs = s(i + 1) + " " + t(i) + " " + t(i + 1);
        else
          rhs = s(j) + " " + t(i + 1);
        out.push_back({"mixed_codegeneracy", P(n, i, j), t(i) + " " + s(j), rhs, n + 1});
      }
  return out;
}

}  // namespace detail

/// All relation instances with every object rank at most n_max.
inline std::vector<RelationCheck> verify_relations(Category cat, int n_max, int threads = 1) {
  detail::require(n_max >= 0 && n_max <= 8, "verify_relations: need 0 <= n_max <= 8");
  const auto specs = detail::relation_specs(cat, n_max);
  const BarFunctor<RationalField> bar(RationalField{}, dual_numbers(Ring::rationals()), cat);
  std::vector<RelationCheck> out(specs.size());
  parallel_for(specs.size(), threads, [&](std::size_t k) {
    const auto& sp = specs[k];
    RelationCheck& rc = out[k];
    rc.relation = sp.relation;
    rc.instance = sp.params + ": " + sp.lhs + " = " + sp.rhs;
    if (!sp.expect_equal) rc.instance = sp.params + ": " + sp.lhs + " != " + sp.rhs;
    const XMorphism lhs = parse_xword(cat, sp.lhs, sp.source_rank);
    const XMorphism rhs = parse_xword(cat, sp.rhs, sp.source_rank);
    rc.morphisms_ok = xequal(lhs, rhs) == sp.expect_equal;
    // The bar construction sees only the projection, so both sides of every
    // instance (including the braided square) must give the same matrix.
    rc.matrices_ok = bar.map(lhs) == bar.map(rhs) && bar.matrix_direct(lhs) == bar.map(lhs);
  });
  return out;
}

}  // namespace xsh
