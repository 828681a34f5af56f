// xsh: command-line front end for the crossed simplicial homology engines.
//
// Exit codes: 0 success, 1 a computation reported a failure (or hit a
// resource guard), 2 usage error or unreadable input.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "xsh/acceptance.hpp"
#include "xsh/algebra_io.hpp"
#include "xsh/e2op.hpp"
#include "xsh/homology.hpp"
#include "xsh/properties.hpp"
#include "xsh/relations.hpp"
#include "xsh/replacement.hpp"
#include "xsh/series.hpp"

namespace {

using nlohmann::json;
using namespace xsh;

constexpr const char* kVersion = "1.0.0";

struct Common {
  std::string format = "text";
  std::string out;
  std::uint64_t seed = 20240611;
  int threads = default_threads();
  bool unsafe = false;
};

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void add_common(CLI::App* sub, Common& c, bool formats = true) {
  if (formats) sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  sub->add_option("--out", c.out, "Write output to this file instead of stdout");
  sub->add_option("--seed", c.seed, "Seed for randomized sweeps");
  sub->add_option("--threads", c.threads, "Worker threads")->check(CLI::PositiveNumber);
  sub->add_flag("--unsafe-limits", c.unsafe, "Lift the resource guards");
}

json metadata(const Common& c, const std::string& command, json extra = json::object()) {
  json m{{"tool", "xsh"},
         {"version", kVersion},
         {"command", command},
         {"engines",
          {{"braid", "lawrence-krammer-bigelow"}, {"linear_algebra", "exact-sparse"}, {"homology", "bar-complex"}}},
         {"seed", c.seed}};
  for (auto& [k, v] : extra.items()) m[k] = v;
  return m;
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(c.out);
  if (!os) throw Usage("cannot write " + c.out);
  os << text;
}

json number(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

Algebra read_algebra(const std::string& path) {
  try {
    return load_algebra(path);
  } catch (const parse_error& e) {
    throw Usage(e.what());
  } catch (const validation_error& e) {
    throw Usage(e.what());
  } catch (const argument_error& e) {
    throw Usage(e.what());
  }
}

PoincareSeries read_series(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw Usage("cannot read " + path);
  try {
    return read_series_csv(is);
  } catch (const parse_error& e) {
    throw Usage(e.what());
  }
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Usage("expected a comma-separated list of integers, got '" + text + "'");
    }
  }
  if (out.empty()) throw Usage("empty list");
  return out;
}

Category category_arg(const std::string& s) {
  try {
    return parse_category(s);
  } catch (const std::exception& e) {
    throw Usage(e.what());
  }
}

int cmd_verify_relations(const Common& c, const std::string& cat_text, int nmax) {
  const Category cat = category_arg(cat_text);
  if (nmax < 1 || nmax > 8) throw Usage("--nmax must be between 1 and 8");
  const auto report = verify_relations(cat, nmax, c.threads);
  int failed = 0;
  for (const auto& r : report) failed += !r.passed();
  std::ostringstream os;
  if (c.format == "json") {
    json rows = json::array();
    for (const auto& r : report) rows.push_back({{"relation", r.relation}, {"instance", r.instance}, {"status", r.status()}});
    json doc{{"metadata", metadata(c, "verify-relations", {{"category", to_string(cat)}, {"nmax", nmax}})},
             {"results", rows},
             {"failed", failed}};
    os << doc.dump(2) << "\n";
  } else if (c.format == "csv") {
    os << "relation,instance,status\n";
    for (const auto& r : report) os << r.relation << ",\"" << r.instance << "\"," << r.status() << "\n";
  } else {
    for (const auto& r : report)
      if (!r.passed()) os << r.status() << " " << r.relation << " " << r.instance << "\n";
    os << to_string(cat) << " nmax=" << nmax << ": " << report.size() - failed << "/" << report.size()
       << " relation instances hold\n";
  }
  emit(c, os.str());
  return failed ? 1 : 0;
}

int cmd_verify_e2(const Common& c, int limit, int max_total) {
  if (limit < 0 || limit > 4) throw Usage("--limit must be between 0 and 4");
  if (max_total < 1 || (max_total > 6 && !c.unsafe)) throw Usage("--max-strands must be between 1 and 6");
  const auto monoidal = check_braided_monoidal(limit);
  const auto operad = check_e2_patterns(max_total, 3, c.seed);
  const auto cables = check_cable_contracts(1000, c.seed + 1);
  int failed = 0;
  for (const auto& m : monoidal) failed += !m.passed;
  failed += static_cast<int>(operad.failures + cables.failures);
  std::ostringstream os;
  auto prop = [](const PropertyReport& r) {
    return json{{"check", r.name}, {"trials", r.trials}, {"failures", r.failures}, {"first_failure", r.first_failure}};
  };
  if (c.format == "json") {
    json rows = json::array();
    for (const auto& m : monoidal) rows.push_back({{"check", m.kind}, {"instance", m.instance}, {"status", m.passed ? "pass" : "FAIL"}});
    json doc{{"metadata", metadata(c, "verify-e2", {{"limit", limit}, {"max_strands", max_total}})},
             {"monoidal", rows},
             {"properties", {prop(operad), prop(cables)}},
             {"failed", failed}};
    os << doc.dump(2) << "\n";
  } else if (c.format == "csv") {
    os << "check,instance,status\n";
    for (const auto& m : monoidal) os << m.kind << ",\"" << m.instance << "\"," << (m.passed ? "pass" : "FAIL") << "\n";
    for (const auto* r : {&operad, &cables})
      os << r->name << ",\"" << r->trials << " trials\"," << (r->passed() ? "pass" : "FAIL") << "\n";
  } else {
    for (const auto& m : monoidal)
      if (!m.passed) os << "FAIL " << m.kind << " " << m.instance << "\n";
    int ok = 0;
    for (const auto& m : monoidal) ok += m.passed;
    os << "monoidal: " << ok << "/" << monoidal.size() << " hexagon and naturality instances hold\n";
    for (const auto* r : {&operad, &cables}) {
      os << r->name << ": " << r->trials - r->failures << "/" << r->trials << " hold\n";
      if (!r->first_failure.empty()) os << "  first failure: " << r->first_failure << "\n";
    }
  }
  emit(c, os.str());
  return failed ? 1 : 0;
}

int cmd_hochschild(const Common& c, const std::string& path, int dmax) {
  const Algebra R = read_algebra(path);
  if (dmax < 0) throw Usage("--dmax must be >= 0");
  HochschildLimits lim;
  lim.unsafe = c.unsafe;
  const auto hh = hochschild(R, dmax, lim);
  std::ostringstream os;
  if (c.format == "json") {
    json rows = json::array();
    for (int n = 0; n <= dmax; ++n) {
      json t = json::array();
      for (const auto& x : hh[n].torsion) t.push_back(number(x));
      rows.push_back({{"degree", n}, {"dim", hh[n].dim}, {"torsion", t}, {"group", to_string(hh[n])}});
    }
    json doc{{"metadata", metadata(c, "hochschild", {{"algebra", R.name()}, {"ring", to_string(R.ring())}, {"dmax", dmax}})},
             {"homology", rows}};
    os << doc.dump(2) << "\n";
  } else if (c.format == "csv") {
    os << "degree,value\n";
    for (int n = 0; n <= dmax; ++n) os << n << "," << to_string(hh[n]) << "\n";
  } else {
    for (int n = 0; n <= dmax; ++n) os << "HH_" << n << " = " << to_string(hh[n]) << "\n";
  }
  emit(c, os.str());
  return 0;
}

int cmd_hsigma0(const Common& c, const std::string& path) {
  const Algebra R = read_algebra(path);
  const auto h = hsigma0(R);
  const AbelianGroup g{h.dim, h.torsion};
  const bool integral = R.ring().kind == Ring::Kind::integer;
  std::ostringstream os;
  if (c.format == "json") {
    json t = json::array();
    for (const auto& x : h.torsion) t.push_back(number(x));
    json doc{{"metadata", metadata(c, "hsigma0", {{"algebra", R.name()}, {"ring", to_string(R.ring())}})},
             {"dim", h.dim},
             {"torsion", t},
             {"ideal_rank", h.ideal_rank},
             {"quotient_basis", h.quotient_basis},
             {"two_sided_verified", h.two_sided_verified}};
    os << doc.dump(2) << "\n";
  } else if (c.format == "csv") {
    os << "dim,torsion,ideal_rank\n" << h.dim << ",\"";
    for (std::size_t i = 0; i < h.torsion.size(); ++i) os << (i ? " " : "") << h.torsion[i].get_str();
    os << "\"," << h.ideal_rank << "\n";
  } else {
    os << "dimension " << h.dim << "\n";
    if (integral) os << "group " << to_string(g) << "\n";
    if (!integral && !h.quotient_basis.empty()) {
      os << "quotient basis:";
      for (int b : h.quotient_basis) os << " e" << b;
      os << "\n";
    }
  }
  emit(c, os.str());
  return 0;
}

json counts_json(const ChainCounts& k) {
  json chains = json::array(), cells = json::array();
  for (auto x : k.chains) chains.push_back(static_cast<long long>(x));
  for (auto x : k.cells) cells.push_back(static_cast<long long>(x));
  return {{"chains", chains}, {"cells", cells}};
}

int cmd_truncated(const Common& c, const std::string& path, const std::string& cat_text, int degree,
                  const std::string& Ns_text) {
  const Algebra R = read_algebra(path);
  const Category cat = category_arg(cat_text);
  const auto Ns = parse_int_list(Ns_text);
  if (degree < 0 || degree > 2) throw Usage("--degree must be 0, 1 or 2");
  if (R.ring().kind == Ring::Kind::integer) throw Usage("truncated homology needs coefficients in a field");
  ReplacementLimits lim;
  lim.unsafe = c.unsafe;
  const auto t = truncated_homology(R, cat, degree, Ns, lim);
  const std::string verdict = t.stabilized ? "stabilized" : "not stabilized";
  std::ostringstream os;
  if (c.format == "json") {
    json rows = json::array();
    for (std::size_t i = 0; i < t.Ns.size(); ++i)
      rows.push_back({{"degree", degree}, {"N", t.Ns[i]}, {"dim", t.dims[i]}, {"counts", counts_json(t.counts[i])}});
    json meta = metadata(c, "truncated",
                         {{"algebra", R.name()},
                          {"ring", to_string(R.ring())},
                          {"category", to_string(cat)},
                          {"truncation", Ns},
                          {"method", t.method},
                          {"braided_shadow", t.braided_shadow}});
    if (t.braided_shadow)
      meta["caveat"] = "braided morphisms are enumerated through their symmetric images; pure braid contributions are not captured";
    json doc{{"metadata", meta}, {"results", rows}, {"verdict", verdict}};
    os << doc.dump(2) << "\n";
  } else if (c.format == "csv") {
    os << "degree,N,dim\n";
    for (std::size_t i = 0; i < t.Ns.size(); ++i) os << degree << "," << t.Ns[i] << "," << t.dims[i] << "\n";
  } else {
    for (std::size_t i = 0; i < t.Ns.size(); ++i)
      os << "H_" << degree << " " << to_string(cat) << " N=" << t.Ns[i] << ": " << t.dims[i] << "\n";
    os << verdict << (degree > 0 ? " (diagnostic only)" : "") << "\n";
    if (t.braided_shadow) os << "note: braided complex computed through symmetric images\n";
  }
  emit(c, os.str());
  return 0;
}

int cmd_compare(const Common& c, const std::string& path, int N, int pmax) {
  const Algebra R = read_algebra(path);
  if (R.ring().kind == Ring::Kind::integer) throw Usage("the comparison needs coefficients in a field");
  ReplacementLimits lim;
  lim.unsafe = c.unsafe;
  const auto r = braid_to_sym_comparison(R, N, pmax, lim);
  std::ostringstream os;
  if (c.format == "json") {
    json doc{{"metadata", metadata(c, "compare", {{"algebra", R.name()}, {"N", N}, {"p_max", pmax}, {"braided_shadow", true}})},
             {"commutes", r.commutes},
             {"labelwise_surjective", r.labelwise_surjective},
             {"h0_isomorphism", r.h0_iso},
             {"h0_braid", r.h0_braid},
             {"h0_sym", r.h0_sym},
             {"braid_dims", r.braid_dims},
             {"sym_dims", r.sym_dims}};
    os << doc.dump(2) << "\n";
  } else if (c.format == "csv") {
    os << "commutes,h0_isomorphism,h0_braid,h0_sym\n"
       << r.commutes << "," << r.h0_iso << "," << r.h0_braid << "," << r.h0_sym << "\n";
  } else {
    os << "chain map commutes with differentials: " << (r.commutes ? "yes" : "no") << "\n";
    os << "H_0: braid " << r.h0_braid << ", sym " << r.h0_sym << ", isomorphism " << (r.h0_iso ? "yes" : "no") << "\n";
  }
  emit(c, os.str());
  return r.commutes && r.h0_iso ? 0 : 1;
}

std::string render_series(const Common& c, const PoincareSeries& s, const std::string& kind, json extra) {
  std::ostringstream os;
  if (c.format == "json") {
    json coeffs = json::array();
    for (const auto& x : s.coeffs) coeffs.push_back(number(x));
    extra["characteristic"] = s.characteristic;
    extra["dmax"] = s.dmax;
    json doc{{"metadata", metadata(c, "series " + kind, extra)}, {"coefficients", coeffs}};
    os << doc.dump(2) << "\n";
  } else if (c.format == "csv") {
    write_series_csv(os, s);
  } else {
    os << to_string(s) << "\n";
  }
  return os.str();
}

std::vector<int> dims_arg(const std::string& text) {
  try {
    return parse_reduced_dims(text);
  } catch (const parse_error& e) {
    throw Usage(e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Crossed simplicial homology toolkit"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  Common common;

  std::string category = "sym", algebra, Ns = "1,2,3", dims, a_path, b_path;
  int nmax = 5, dmax = 4, degree = 0, limit = 3, max_strands = 6, N = 2, pmax = 1;
  std::uint32_t p = 2;

  auto* vr = app.add_subcommand("verify-relations", "Check the defining relations of a category");
  vr->add_option("--category", category)->check(CLI::IsMember({"cyc", "sym", "braid"}));
  vr->add_option("--nmax", nmax, "Largest rank");
  add_common(vr, common);

  auto* ve = app.add_subcommand("verify-e2", "Check hexagons, naturality, cabling and the E2 operad laws");
  ve->add_option("--limit", limit, "Block sizes for the monoidal checks");
  ve->add_option("--max-strands", max_strands, "Largest total arity for the operad patterns");
  add_common(ve, common);

  auto* hh = app.add_subcommand("hochschild", "Hochschild homology of an algebra");
  hh->add_option("--algebra", algebra)->required();
  hh->add_option("--dmax", dmax);
  add_common(hh, common);

  auto* h0 = app.add_subcommand("hsigma0", "Degree-0 symmetric homology: R modulo its commutator ideal");
  h0->add_option("--algebra", algebra)->required();
  add_common(h0, common);

  auto* tr = app.add_subcommand("truncated", "Homology of the truncated replacement complex");
  tr->add_option("--algebra", algebra)->required();
  tr->add_option("--category", category)->check(CLI::IsMember({"cyc", "sym", "braid"}));
  tr->add_option("--degree", degree);
  tr->add_option("--N", Ns, "Comma-separated truncations");
  add_common(tr, common);

  auto* cmp = app.add_subcommand("compare", "Braided to symmetric comparison map");
  cmp->add_option("--algebra", algebra)->required();
  cmp->add_option("--N", N);
  cmp->add_option("--pmax", pmax);
  add_common(cmp, common);

  auto* se = app.add_subcommand("series", "Poincare series calculators");
  se->require_subcommand(1);
  auto* sn = se->add_subcommand("snaith", "Snaith splitting: H_*(QY)");
  sn->add_option("--dims", dims, "Reduced homology as degree:count pairs")->required();
  sn->add_option("--p", p);
  sn->add_option("--dmax", dmax);
  add_common(sn, common);
  auto* ja = se->add_subcommand("james", "James splitting: H_*(Omega Sigma Y)");
  ja->add_option("--dims", dims)->required();
  ja->add_option("--p", p);
  ja->add_option("--dmax", dmax);
  add_common(ja, common);
  auto* qu = se->add_subcommand("quotient", "a / b");
  qu->add_option("--a", a_path)->required();
  qu->add_option("--b", b_path)->required();
  add_common(qu, common);
  auto* pr = se->add_subcommand("product", "a * b");
  pr->add_option("--a", a_path)->required();
  pr->add_option("--b", b_path)->required();
  add_common(pr, common);

  auto* ac = app.add_subcommand("acceptance", "Run the acceptance suite");
  add_common(ac, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (vr->parsed()) return cmd_verify_relations(common, category, nmax);
    if (ve->parsed()) return cmd_verify_e2(common, limit, max_strands);
    if (hh->parsed()) return cmd_hochschild(common, algebra, dmax);
    if (h0->parsed()) return cmd_hsigma0(common, algebra);
    if (tr->parsed()) return cmd_truncated(common, algebra, category, degree, Ns);
    if (cmp->parsed()) return cmd_compare(common, algebra, N, pmax);
    if (sn->parsed() || ja->parsed()) {
      if (dmax < 0) throw Usage("--dmax must be >= 0");
      if (p != 0 && !is_prime_u32(p)) throw Usage("--p must be 0 or a prime");
      const auto red = dims_arg(dims);
      PoincareSeries s;
      if (sn->parsed()) {
        SnaithLimits lim;
        lim.group.unsafe = common.unsafe;
        s = snaith_series(red, p, dmax, lim, common.threads);
      } else {
        s = tensor_algebra_series(space_series(red, p, dmax));
      }
      emit(common, render_series(common, s, sn->parsed() ? "snaith" : "james", {{"dims", dims}}));
      return 0;
    }
    if (qu->parsed() || pr->parsed()) {
      const auto a = read_series(a_path), b = read_series(b_path);
      const auto s = qu->parsed() ? split_quotient(a, b) : multiply(a, b);
      emit(common, render_series(common, s, qu->parsed() ? "quotient" : "product", json::object()));
      return 0;
    }
    if (ac->parsed()) {
      const auto report = run_acceptance(common.seed, common.threads, &std::cerr);
      std::ostringstream os;
      if (common.format == "json") {
        json rows = json::array();
        for (const auto& c : report.criteria)
          rows.push_back({{"id", c.id}, {"name", c.name}, {"status", c.passed ? "pass" : "fail"}, {"detail", c.detail}});
        os << json{{"metadata", metadata(common, "acceptance")}, {"criteria", rows}, {"passed", report.passed()}}.dump(2)
           << "\n";
      } else if (common.format == "csv") {
        os << "id,name,status\n";
        for (const auto& c : report.criteria) os << c.id << "," << c.name << "," << (c.passed ? "pass" : "fail") << "\n";
      } else {
        os << to_text(report);
      }
      emit(common, os.str());
      return report.passed() ? 0 : 1;
    }
  } catch (const Usage& e) {
    std::cerr << "xsh: " << e.what() << "\n";
    return 2;
  } catch (const argument_error& e) {
    std::cerr << "xsh: " << e.what() << "\n";
    return 2;
  } catch (const resource_error& e) {
    std::cerr << "xsh: " << e.what() << " (--unsafe-limits lifts the guard)\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "xsh: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
