#pragma once

// Truncated Poincare series with nonnegative integer coefficients, and the
// graded-dimension shadows of the James and Snaith splittings.

#include <gmpxx.h>

#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "xsh/algebra.hpp"
#include "xsh/error.hpp"
#include "xsh/field.hpp"
#include "xsh/group_homology.hpp"
#include "xsh/parallel.hpp"

namespace xsh {

struct PoincareSeries {
  std::uint32_t characteristic = 0;
  int dmax = 0;
  std::vector<mpz_class> coeffs;  // degrees 0..dmax

  PoincareSeries() : coeffs(1, 0) {}
  PoincareSeries(std::uint32_t p, int cap, std::vector<mpz_class> c) : characteristic(p), dmax(cap), coeffs(std::move(c)) {
    detail::require(dmax >= 0, "series: cap must be >= 0");
    detail::require(static_cast<int>(coeffs.size()) <= dmax + 1, "series: more coefficients than the cap allows");
    coeffs.resize(static_cast<std::size_t>(dmax + 1), 0);
    for (const auto& c : coeffs) detail::require(sgn(c) >= 0, "series: coefficients must be nonnegative");
  }

  static PoincareSeries one(std::uint32_t p, int cap) { return PoincareSeries(p, cap, {1}); }

  const mpz_class& operator[](int d) const { return coeffs.at(static_cast<std::size_t>(d)); }
  friend bool operator==(const PoincareSeries&, const PoincareSeries&) = default;
};

inline std::string to_string(const PoincareSeries& s) {
  std::string out;
  for (int d = 0; d <= s.dmax; ++d) out += (d ? "," : "") + s[d].get_str();
  return out;
}

namespace detail {
inline void require_compatible(const PoincareSeries& a, const PoincareSeries& b, const char* who) {
  if (a.characteristic != b.characteristic || a.dmax != b.dmax)
    throw argument_error(std::string(who) + ": characteristic or cap mismatch");
}
}  // namespace detail

/// Cauchy product truncated at the common cap.
inline PoincareSeries multiply(const PoincareSeries& a, const PoincareSeries& b) {
  detail::require_compatible(a, b, "multiply");
  std::vector<mpz_class> c(static_cast<std::size_t>(a.dmax + 1), 0);
  for (int i = 0; i <= a.dmax; ++i)
    for (int j = 0; i + j <= a.dmax; ++j) c[i + j] += a[i] * b[j];
  return PoincareSeries(a.characteristic, a.dmax, std::move(c));
}

/// Series of the tensor algebra on the reduced part: 1/(1 - f~).  With
/// `connected` set, f is the series of a connected space and f~ = f - 1;
/// otherwise f is already reduced and must have zero constant term.
inline PoincareSeries tensor_algebra_series(const PoincareSeries& f, bool connected = true) {
  std::vector<mpz_class> red = f.coeffs;
  if (connected) {
    if (f[0] != 1) throw argument_error("tensor_algebra_series: a connected series has constant term 1");
    red[0] = 0;
  }
  if (red[0] != 0) throw argument_error("tensor_algebra_series: reduced series has a nonzero constant term");
  std::vector<mpz_class> t(static_cast<std::size_t>(f.dmax + 1), 0);
  t[0] = 1;
  for (int d = 1; d <= f.dmax; ++d)
    for (int i = 1; i <= d; ++i) t[d] += red[i] * t[d - i];
  return PoincareSeries(f.characteristic, f.dmax, std::move(t));
}

/// total / factor by long division; the quotient must have nonnegative
/// coefficients.
inline PoincareSeries split_quotient(const PoincareSeries& total, const PoincareSeries& factor) {
  detail::require_compatible(total, factor, "split_quotient");
  if (factor[0] != 1) throw argument_error("split_quotient: factor must have constant term 1");
  std::vector<mpz_class> q(static_cast<std::size_t>(total.dmax + 1), 0);
  for (int d = 0; d <= total.dmax; ++d) {
    mpz_class r = total[d];
    for (int i = 1; i <= d; ++i) r -= factor[i] * q[d - i];
    if (sgn(r) < 0)
      throw validation_error("split_quotient: negative coefficient in degree " + std::to_string(d) +
                             " (inconsistent inputs)");
    q[d] = r;
  }
  return PoincareSeries(total.characteristic, total.dmax, std::move(q));
}

/// H_*(Mf) (x) H_*(fiber) by Kunneth; base is H_*(X) under the Thom isomorphism.
inline PoincareSeries thom_assembly(const PoincareSeries& base, const PoincareSeries& fiber_plus) {
  detail::require_compatible(base, fiber_plus, "thom_assembly");
  return multiply(base, fiber_plus);
}

/// Graded dimensions of a reduced homology: reduced_dims[d] classes in degree d.
inline std::vector<int> basis_degrees_of(const std::vector<int>& reduced_dims) {
  std::vector<int> degs;
  for (std::size_t d = 0; d < reduced_dims.size(); ++d) {
    detail::require(reduced_dims[d] >= 0, "reduced dimensions must be nonnegative");
    for (int k = 0; k < reduced_dims[d]; ++k) degs.push_back(static_cast<int>(d));
  }
  return degs;
}

/// Parses "1:1,3:2" (degree:count pairs).
inline std::vector<int> parse_reduced_dims(std::string_view text) {
  std::vector<int> dims;
  std::string s(text);
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw parse_error("dims: expected degree:count, got '" + item + "'");
    int deg = 0, cnt = 0;
    try {
      std::size_t u1 = 0, u2 = 0;
      deg = std::stoi(item.substr(0, colon), &u1);
      cnt = std::stoi(item.substr(colon + 1), &u2);
      if (u1 != colon || u2 != item.size() - colon - 1) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw parse_error("dims: expected degree:count, got '" + item + "'");
    }
    if (deg < 0 || cnt < 0) throw parse_error("dims: degrees and counts must be nonnegative");
    if (static_cast<int>(dims.size()) <= deg) dims.resize(static_cast<std::size_t>(deg + 1), 0);
    dims[deg] += cnt;
  }
  return dims;
}

struct SnaithLimits {
  int max_weight = 6;  // symmetric groups are tabulated explicitly
  GroupHomologyLimits group;
};

/// Weight-k summand: sum over internal degrees D of H_q(Sigma_k; (H~Y)^{(x)k}_D)
/// placed in degree D + q.
inline PoincareSeries snaith_weight(const std::vector<int>& reduced_dims, std::uint32_t p, int dmax, int k,
                                    const SnaithLimits& lim = {}) {
  detail::require(k >= 0, "snaith_weight: weight must be >= 0");
  if (!reduced_dims.empty() && reduced_dims[0] != 0)
    throw argument_error("snaith_series: reduced homology has a class in degree 0");
  std::vector<mpz_class> c(static_cast<std::size_t>(dmax + 1), 0);
  if (k == 0) {
    c[0] = 1;
    return PoincareSeries(p, dmax, std::move(c));
  }
  const auto degs = basis_degrees_of(reduced_dims);
  if (degs.empty() || k > dmax) return PoincareSeries(p, dmax, std::move(c));
  if (k > lim.max_weight && !lim.group.unsafe)
    throw resource_error("snaith_series: weight " + std::to_string(k) + " exceeds the resource guard");
  const Ring ring = p == 0 ? Ring::rationals() : Ring::prime(p);
  visit_field(ring, [&](const auto& f) {
    for (int D = k; D <= dmax; ++D) {
      if (tensor_multi_indices(degs, k, D).empty()) continue;
      const auto M = tensor_power_module(f, degs, k, D);
      const auto h = group_homology(M, dmax - D, lim.group);
      for (int q = 0; q + D <= dmax; ++q) c[D + q] += h[q];
    }
  });
  return PoincareSeries(p, dmax, std::move(c));
}

/// Sum of the weight summands 0..dmax: the graded dimension of H_*(QY; F_p)
/// through the Snaith splitting.
inline PoincareSeries snaith_series(const std::vector<int>& reduced_dims, std::uint32_t p, int dmax,
                                    const SnaithLimits& lim = {}, int threads = 1) {
  detail::require(dmax >= 0, "snaith_series: cap must be >= 0");
  detail::require(p == 0 || is_prime_u32(p), "snaith_series: characteristic must be 0 or a prime");
  if (!lim.group.unsafe) {
    const auto degs = basis_degrees_of(reduced_dims);
    if (!degs.empty() && degs.front() > 0 && dmax / degs.front() > lim.max_weight)
      throw resource_error("snaith_series: weight " + std::to_string(dmax / degs.front()) +
                           " exceeds the resource guard");
  }
  std::vector<PoincareSeries> parts(static_cast<std::size_t>(dmax + 1));
  parallel_for(parts.size(), threads,
               [&](std::size_t k) { parts[k] = snaith_weight(reduced_dims, p, dmax, static_cast<int>(k), lim); });
  std::vector<mpz_class> c(static_cast<std::size_t>(dmax + 1), 0);
  for (const auto& s : parts)
    for (int d = 0; d <= dmax; ++d) c[d] += s[d];
  return PoincareSeries(p, dmax, std::move(c));
}

/// 1 + sum of reduced classes.
inline PoincareSeries space_series(const std::vector<int>& reduced_dims, std::uint32_t p, int dmax) {
  std::vector<mpz_class> c(static_cast<std::size_t>(dmax + 1), 0);
  c[0] = 1;
  for (int d = 1; d < static_cast<int>(reduced_dims.size()) && d <= dmax; ++d) c[d] += reduced_dims[d];
  if (!reduced_dims.empty() && reduced_dims[0] != 0) throw argument_error("space_series: degree-0 reduced class");
  return PoincareSeries(p, dmax, std::move(c));
}

// CSV: "degree,coefficient" per line; '#' lines are comments, "# char=p"
// records the characteristic.

inline void write_series_csv(std::ostream& os, const PoincareSeries& s) {
  os << "# char=" << s.characteristic << "\n";
  os << "degree,coefficient\n";
  for (int d = 0; d <= s.dmax; ++d) os << d << "," << s[d].get_str() << "\n";
}

inline PoincareSeries read_series_csv(std::istream& is) {
  std::uint32_t p = 0;
  std::vector<std::pair<int, mpz_class>> rows;
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      const auto at = line.find("char=");
      if (at != std::string::npos) {
        try {
          p = static_cast<std::uint32_t>(std::stoul(line.substr(at + 5)));
        } catch (const std::exception&) {
          throw parse_error("series csv: bad characteristic on line " + std::to_string(lineno));
        }
      }
      continue;
    }
    if (line == "degree,coefficient") continue;
    const auto comma = line.find(',');
    mpz_class c;
    int d = -1;
    try {
      std::size_t used = 0;
      d = std::stoi(line.substr(0, comma), &used);
      if (comma == std::string::npos || used != comma || c.set_str(line.substr(comma + 1), 10) != 0) throw 0;
    } catch (...) {
      throw parse_error("series csv: expected degree,coefficient on line " + std::to_string(lineno));
    }
    if (d < 0 || sgn(c) < 0) throw parse_error("series csv: negative degree or coefficient on line " + std::to_string(lineno));
    rows.emplace_back(d, c);
  }
  if (rows.empty()) throw parse_error("series csv: no coefficients");
  int dmax = 0;
  for (const auto& [d, c] : rows) dmax = std::max(dmax, d);
  std::vector<mpz_class> coeffs(static_cast<std::size_t>(dmax + 1), 0);
  for (const auto& [d, c] : rows) coeffs[d] = c;
  return PoincareSeries(p, dmax, std::move(coeffs));
}

}  // namespace xsh
