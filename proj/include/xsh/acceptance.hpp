#pragma once

// The acceptance suite: ten criteria, each a deterministic function of the
// seed.  Reports carry no timings so that two runs with one seed are
// byte-identical; elapsed times go to the optional timing stream.

#include <chrono>
#include <cstdint>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "xsh/algebra.hpp"
#include "xsh/bar.hpp"
#include "xsh/braid.hpp"
#include "xsh/e2op.hpp"
#include "xsh/group_homology.hpp"
#include "xsh/homology.hpp"
#include "xsh/properties.hpp"
#include "xsh/relations.hpp"
#include "xsh/replacement.hpp"
#include "xsh/series.hpp"

namespace xsh {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double budget_seconds = 0;
};

struct AcceptanceReport {
  std::uint64_t seed = 0;
  std::vector<CriterionResult> criteria;

  bool passed() const {
    for (const auto& c : criteria)
      if (!c.passed) return false;
    return !criteria.empty();
  }
};

inline std::string to_text(const AcceptanceReport& r) {
  std::ostringstream os;
  os << "acceptance seed=" << r.seed << "\n";
  for (const auto& c : r.criteria)
    os << "criterion " << c.id << " " << c.name << ": " << (c.passed ? "PASS" : "FAIL") << " (" << c.detail << ")\n";
  int passed = 0;
  for (const auto& c : r.criteria) passed += c.passed;
  os << passed << "/" << r.criteria.size() << " criteria passed\n";
  return os.str();
}

/// The algebras every engine is checked against.
inline std::vector<Algebra> acceptance_corpus() {
  return {dual_numbers(Ring::rationals()),
          group_algebra(Ring::prime(2), cyclic_group(2), "F_2[C_2]"),
          group_algebra(Ring::prime(3), cyclic_group(2), "F_3[C_2]"),
          group_algebra(Ring::prime(2), symmetric_group(3), "F_2[S_3]"),
          matrix_algebra(Ring::prime(2), 2),
          truncated_poly(Ring::prime(3), 3)};
}

namespace detail {

inline std::string describe(const Algebra& a) { return a.name() + "/" + to_string(a.ring()); }

inline std::uint64_t derive_seed(std::uint64_t seed, int k) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(k + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

struct Checklist {
  bool ok = true;
  std::vector<std::string> notes;
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back(what);
    }
  }
  void add(const PropertyReport& r) {
    expect(r.passed(), r.name + " failed " + std::to_string(r.failures) + "/" + std::to_string(r.trials) +
                           (r.first_failure.empty() ? "" : " first: " + r.first_failure));
  }
  std::string summary(const std::string& ok_text) const {
    if (ok) return ok_text;
    std::string s;
    for (const auto& n : notes) s += (s.empty() ? "" : "; ") + n;
    return s;
  }
};

/// H_q(C_2; M) from the periodic resolution, T the action of the generator.
template <class F>
std::vector<int> periodic_c2_homology(const SparseMatrix<F>& T, int q_max) {
  const F& f = T.field();
  const int n = T.rows();
  const auto I = SparseMatrix<F>::identity(f, n);
  const int r_minus = rank(I - T), r_plus = rank(I + T);
  std::vector<int> out;
  for (int q = 0; q <= q_max; ++q) {
    if (q == 0)
      out.push_back(n - r_minus);
    else if (q % 2 == 1)
      out.push_back((n - r_minus) - r_plus);
    else
      out.push_back((n - r_plus) - r_minus);
  }
  return out;
}

/// log_p |Hom(G, Z/p)| by enumerating all maps G -> Z/p.
inline int abelianization_rank(const GroupTable& G, int p) {
  const int n = G.order();
  std::vector<int> val(static_cast<std::size_t>(n), 0);
  long long homs = 0;
  while (true) {
    bool hom = true;
    for (int a = 0; a < n && hom; ++a)
      for (int b = 0; b < n && hom; ++b) hom = val[G(a, b)] == (val[a] + val[b]) % p;
    homs += hom;
    int k = 0;
    while (k < n && ++val[k] == p) val[k++] = 0;
    if (k == n) break;
  }
  int r = 0;
  for (long long x = homs; x > 1; x /= p) ++r;
  return r;
}

/// Graded dimension of the free Dyer-Lashof algebra on one class of degree 1
/// over F_2: polynomial on Q^I x for admissible I with excess > 1.
inline std::vector<long long> dyer_lashof_count(int dmax) {
  // Sequences are listed outermost first and grown by a new outermost
  // operation; extending never raises the excess, so failures are pruned.
  std::vector<int> gens{1};
  std::vector<std::vector<int>> frontier{{}};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& I : frontier) {
      int degree = 1;
      for (int s : I) degree += s;
      for (int s = 2; degree + s <= dmax; ++s) {
        if (!I.empty() && s > 2 * I.front()) continue;
        std::vector<int> J{s};
        J.insert(J.end(), I.begin(), I.end());
        int excess = J.front();
        for (std::size_t j = 1; j < J.size(); ++j) excess -= J[j];
        if (excess <= 1) continue;
        gens.push_back(degree + s);
        next.push_back(std::move(J));
      }
    }
    frontier = std::move(next);
  }
  std::vector<long long> poly(static_cast<std::size_t>(dmax + 1), 0);
  poly[0] = 1;
  for (int g : gens)
    for (int d = g; d <= dmax; ++d) poly[d] += poly[d - g];
  return poly;
}

}  // namespace detail

using CriterionFn = std::function<CriterionResult(std::uint64_t seed, int threads)>;

inline CriterionResult criterion_relations(std::uint64_t, int threads) {
  detail::Checklist c;
  std::string counts;
  for (auto cat : {Category::cyclic, Category::symmetric, Category::braided}) {
    const auto report = verify_relations(cat, 5, threads);
    int failed = 0;
    std::string first;
    for (const auto& r : report)
      if (!r.passed() && failed++ == 0) first = r.relation + " " + r.instance;
    c.expect(failed == 0, to_string(cat) + ": " + std::to_string(failed) + " failing, first " + first);
    counts += (counts.empty() ? "" : " ") + to_string(cat) + "=" + std::to_string(report.size());
  }
  return {1, "relation-suite", c.ok, c.summary("all instances hold as morphisms and matrices; " + counts), 60};
}

inline CriterionResult criterion_composition(std::uint64_t seed, int) {
  detail::Checklist c;
  int k = 0;
  for (auto cat : {Category::cyclic, Category::symmetric, Category::braided}) {
    c.add(check_associativity(cat, 10000, detail::derive_seed(seed, 20 + k)));
    c.add(check_factorization(cat, 1000, detail::derive_seed(seed, 30 + k)));
    ++k;
  }
  c.add(check_projection_functor(10000, detail::derive_seed(seed, 40)));
  return {2, "composition-soundness", c.ok, c.summary("10000 triples per category, 0 failures"), 300};
}

inline CriterionResult criterion_hsigma0(std::uint64_t, int) {
  detail::Checklist c;
  for (int n : {2, 3}) {
    const auto h = hsigma0(matrix_algebra(Ring::integers(), n));
    c.expect(h.dim == 0 && h.torsion.empty(), "M_" + std::to_string(n) + "(Z) gave rank " + std::to_string(h.dim));
  }
  int commutative = 0;
  for (const auto& R : acceptance_corpus()) {
    const auto h = hsigma0(R);
    c.expect(h.two_sided_verified, detail::describe(R) + ": ideal not two-sided");
    if (R.is_commutative()) {
      ++commutative;
      c.expect(h.dim == R.dim(), detail::describe(R) + ": expected the whole algebra");
    }
  }
  for (const auto& R : {truncated_poly(Ring::integers(), 3), ground_algebra(Ring::integers())}) {
    const auto h = hsigma0(R);
    c.expect(h.dim == R.dim() && h.torsion.empty(), detail::describe(R) + ": expected the whole algebra");
  }
  const auto s3 = hsigma0(group_algebra(Ring::prime(2), symmetric_group(3)));
  c.expect(s3.dim == 2, "F_2[S_3] gave " + std::to_string(s3.dim));
  return {3, "hsigma0", c.ok,
          c.summary("M_2(Z)=M_3(Z)=0; " + std::to_string(commutative + 2) + " commutative algebras unchanged; F_2[S_3]=2"), 10};
}

inline CriterionResult criterion_truncated(std::uint64_t, int) {
  detail::Checklist c;
  std::string values;
  for (const auto& R : acceptance_corpus()) {
    const int target = hsigma0(R).dim;
    for (auto cat : {Category::symmetric, Category::braided}) {
      const auto t = truncated_homology(R, cat, 0, {1, 2, 3});
      bool decreasing = true;
      for (std::size_t i = 1; i < t.dims.size(); ++i) decreasing = decreasing && t.dims[i] <= t.dims[i - 1];
      c.expect(t.stabilized && t.dims.back() == target && decreasing,
               detail::describe(R) + " " + to_string(cat) + " degree 0 gave " + std::to_string(t.dims.back()) +
                   " against " + std::to_string(target));
      if (cat == Category::symmetric) values += (values.empty() ? "" : " ") + std::to_string(t.dims.back());
    }
    const int full = visit_field(R.ring(), [&](const auto& f) {
      return build_replacement_over(f, R, Category::symmetric, 2, 1).complex.homology(0).dim;
    });
    const int via_gens = visit_field(R.ring(), [&](const auto& f) { return replacement_h0_dim(f, R, Category::symmetric, 2); });
    c.expect(full == via_gens, detail::describe(R) + ": generator image disagrees with the full d_1");
    const auto cmp = braid_to_sym_comparison(R, 2, 1);
    c.expect(cmp.commutes && cmp.h0_iso, detail::describe(R) + ": comparison map fails at N=2");
  }
  const auto dual = braid_to_sym_comparison(dual_numbers(Ring::rationals()), 2, 2);
  c.expect(dual.commutes && dual.h0_iso, "dual numbers: comparison map fails at N=2, p=2");
  return {4, "truncated-engine", c.ok, c.summary("stable by N=3 and equal to hsigma0: " + values), 600};
}

inline CriterionResult criterion_hochschild(std::uint64_t, int) {
  detail::Checklist c;
  const Algebra R = truncated_poly(Ring::prime(3), 2);
  std::vector<int> dims;
  for (const auto& h : hochschild(R, 4)) dims.push_back(h.dim);
  c.expect(dims == std::vector<int>{2, 1, 1, 1, 1}, "HH(F_3[t]/t^2) wrong");
  c.expect(dims.size() == 5 && dims[0] == commutator_quotient_dim(R), "HH_0 disagrees with the commutator quotient");
  c.expect(dims.size() == 5 && dims[1] == kahler_differentials_dim(R), "HH_1 disagrees with the Kahler differentials");
  const Algebra M = matrix_algebra(Ring::prime(3), 2);
  const int hh0 = hochschild(M, 0)[0].dim;
  c.expect(hh0 == 1 && commutator_quotient_dim(M) == 1, "HH_0(M_2(F_3)) gave " + std::to_string(hh0));
  std::string s;
  for (int d : dims) s += (s.empty() ? "" : ",") + std::to_string(d);
  return {5, "hochschild", c.ok, c.summary("HH(F_3[t]/t^2)=(" + s + "), HH_0(M_2(F_3))=1"), 120};
}

inline CriterionResult criterion_braids(std::uint64_t seed, int) {
  detail::Checklist c;
  for (int n = 2; n <= 6; ++n)
    for (int i = 1; i < n; ++i) {
      if (i + 1 < n)
        c.expect(braid_eq(Braid(n, {i, i + 1, i}), Braid(n, {i + 1, i, i + 1})), "Artin relation fails");
      for (int j = i + 2; j < n; ++j) c.expect(braid_eq(Braid(n, {i, j}), Braid(n, {j, i})), "far commutation fails");
      c.expect(braid_eq(Braid(n, {i, -i}), Braid::identity(n)), "inverse fails");
    }
  c.expect(!braid_eq(Braid(2, {1}), Braid(2, {-1})), "s1 equals its inverse");
  c.expect(!braid_eq(Braid(3, {1, 1}), Braid::identity(3)), "s1^2 is trivial");
  int hexagons = 0;
  for (const auto& m : check_braided_monoidal(3)) {
    c.expect(m.passed, m.kind + " " + m.instance);
    hexagons += m.kind != "naturality";
  }
  c.add(check_cable_contracts(1000, detail::derive_seed(seed, 60)));
  const auto e2 = check_e2_patterns(6, 3, detail::derive_seed(seed, 61));
  c.add(e2);
  return {6, "braid-kernel", c.ok,
          c.summary(std::to_string(hexagons) + " hexagon instances, 1000 cable pairs, " + std::to_string(e2.trials) +
                    " operad instances"),
          300};
}

inline CriterionResult criterion_duality(std::uint64_t seed, int) {
  detail::Checklist c;
  c.add(check_duality_table(5));
  c.add(check_duality_functoriality(1000, detail::derive_seed(seed, 70)));
  for (const auto& R : {dual_numbers(Ring::rationals()), matrix_algebra(Ring::prime(3), 2),
                        group_algebra(Ring::prime(2), symmetric_group(3))}) {
    visit_field(R.ring(), [&](const auto& f) {
      const BarFunctor<std::decay_t<decltype(f)>> B(f, R, Category::cyclic);
      c.add(check_cyclic_face_routes(B, 4));
    });
  }
  return {7, "cyclic-duality", c.ok, c.summary("generator table, 1000 composable pairs, face routes for n<=4"), 120};
}

inline CriterionResult criterion_group_homology(std::uint64_t, int) {
  detail::Checklist c;
  const PrimeField f2(2), f3(3);
  const GroupTable c2 = cyclic_group(2);
  const auto trivial = GModule<PrimeField>::trivial(f2, c2);
  c.expect(group_homology(trivial, 4) == detail::periodic_c2_homology(trivial.act(1), 4) &&
               group_homology(trivial, 4) == std::vector<int>(5, 1),
           "H_*(C_2;F_2) disagrees with the periodic resolution");
  // The regular module and the sign-twisted tensor square as further checks.
  const auto regular = GModule<PrimeField>(c2, 2, {SparseMatrix<PrimeField>::identity(f2, 2),
                                                   SparseMatrix<PrimeField>::from_triplets(f2, 2, 2, {{1, 0, 1}, {0, 1, 1}})});
  c.expect(group_homology(regular, 4) == detail::periodic_c2_homology(regular.act(1), 4), "regular module disagrees");
  const auto square = tensor_power_module(f3, {1, 2}, 2, 3);
  c.expect(group_homology(square, 4) == detail::periodic_c2_homology(square.act(1), 4), "graded square disagrees");
  const GroupTable s3 = symmetric_group(3);
  const int h1_2 = group_homology(GModule<PrimeField>::trivial(f2, s3), 1)[1];
  const int h1_3 = group_homology(GModule<PrimeField>::trivial(f3, s3), 1)[1];
  c.expect(h1_2 == 1 && h1_2 == detail::abelianization_rank(s3, 2), "H_1(S_3;F_2) gave " + std::to_string(h1_2));
  c.expect(h1_3 == 0 && h1_3 == detail::abelianization_rank(s3, 3), "H_1(S_3;F_3) gave " + std::to_string(h1_3));
  return {8, "group-homology", c.ok, c.summary("H_q(C_2;F_2)=1 for q<=4; H_1(S_3;F_2)=1; H_1(S_3;F_3)=0"), 180};
}

inline CriterionResult criterion_series(std::uint64_t seed, int threads) {
  detail::Checklist c;
  const auto james = tensor_algebra_series(PoincareSeries(0, 20, {1, 1}));
  c.expect(james.coeffs == std::vector<mpz_class>(21, 1), "tensor algebra on one degree-1 class is not all ones");
  const auto snaith = snaith_series({0, 1}, 2, 4, {}, threads);
  c.expect(to_string(snaith) == "1,1,1,2,3", "snaith series gave " + to_string(snaith));
  const auto dl = detail::dyer_lashof_count(4);
  bool dl_ok = true;
  for (int d = 0; d <= 4; ++d) dl_ok = dl_ok && snaith[d] == mpz_class(static_cast<long>(dl[d]));
  c.expect(dl_ok, "snaith series disagrees with the Dyer-Lashof count");
  c.add(check_series_roundtrip(1000, detail::derive_seed(seed, 90)));
  PropertyReport thom{"thom-assembly"};
  Rng rng(detail::derive_seed(seed, 91));
  thom.record(to_string(thom_assembly(PoincareSeries(2, 3, {1, 1}), PoincareSeries(2, 3, {1, 0, 1}))) == "1,1,1,1",
              [] { return std::string("(1,1)*(1,0,1)"); });
  for (int t = 0; t < 1000; ++t) {
    const auto a = random_series(rng, 2, 10, 4, true), b = random_series(rng, 2, 10, 4, true);
    const auto p = thom_assembly(a, b);
    bool ok = true;
    for (int d = 0; d <= 10; ++d) {
      mpz_class s = 0;
      for (int i = 0; i <= d; ++i) s += a[i] * b[d - i];
      ok = ok && s == p[d];
    }
    thom.record(ok, [&] { return to_string(a) + " * " + to_string(b); });
  }
  c.add(thom);
  return {9, "series", c.ok, c.summary("James all ones to 20; Snaith 1,1,1,2,3; 1000 quotient and product pairs"), 180};
}

inline std::vector<CriterionFn> acceptance_criteria() {
  return {criterion_relations, criterion_composition, criterion_hsigma0,     criterion_truncated, criterion_hochschild,
          criterion_braids,    criterion_duality,     criterion_group_homology, criterion_series};
}

/// Criteria 1-9; `timing` receives one elapsed-time line per criterion.
inline AcceptanceReport run_acceptance_core(std::uint64_t seed, int threads, std::ostream* timing) {
  AcceptanceReport report{seed, {}};
  for (const auto& fn : acceptance_criteria()) {
    const auto t0 = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
      r = fn(seed, threads);
    } catch (const std::exception& e) {
      r.id = static_cast<int>(report.criteria.size()) + 1;
      r.name = "criterion";
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (r.budget_seconds > 0 && secs > r.budget_seconds) {
      r.passed = false;
      r.detail += "; over the time budget";
    }
    if (timing) *timing << "criterion " << r.id << " " << r.name << " took " << secs << " s\n";
    report.criteria.push_back(std::move(r));
  }
  return report;
}

/// All ten criteria; the last reruns 1-9 and compares the two reports.
inline AcceptanceReport run_acceptance(std::uint64_t seed, int threads = 1, std::ostream* timing = nullptr) {
  const auto t0 = std::chrono::steady_clock::now();
  AcceptanceReport first = run_acceptance_core(seed, threads, timing);
  const AcceptanceReport second = run_acceptance_core(seed, threads, nullptr);
  const bool same = to_text(first) == to_text(second);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  CriterionResult r{10, "reproducibility", same && secs <= 1800,
                    same ? "two runs with the same seed gave byte-identical reports" : "reports differ between runs",
                    1800};
  if (secs > 1800) r.detail += "; over the time budget";
  if (timing) *timing << "criterion 10 reproducibility took " << secs << " s (two runs)\n";
  first.criteria.push_back(std::move(r));
  return first;
}

}  // namespace xsh
