#pragma once

// Finite ordinals [n] = {0, ..., n}, order-preserving maps between them and
// the augmented simplex category (rank -1 is the empty ordinal).

#include <algorithm>
#include <compare>
#include <cstdint>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "xsh/error.hpp"

namespace xsh {

class OrdinalMap {
 public:
  OrdinalMap() = default;

  OrdinalMap(int source_rank, int target_rank, std::vector<int> values)
      : source_rank_(source_rank), target_rank_(target_rank), values_(std::move(values)) {
    detail::require(source_rank >= -1 && target_rank >= -1, "ordinal ranks must be >= -1");
    detail::require(static_cast<int>(values_.size()) == source_rank + 1,
                    "ordinal map needs source_rank+1 values");
    for (std::size_t i = 0; i < values_.size(); ++i) {
      detail::require(values_[i] >= 0 && values_[i] <= target_rank, "ordinal value out of range");
      detail::require(i == 0 || values_[i - 1] <= values_[i], "ordinal map must be order preserving");
    }
  }

  static OrdinalMap identity(int rank) {
    std::vector<int> v(static_cast<std::size_t>(rank + 1));
    for (int i = 0; i <= rank; ++i) v[i] = i;
    return OrdinalMap(rank, rank, std::move(v));
  }

  /// The unique map out of the augmented initial object.
  static OrdinalMap from_empty(int target_rank) { return OrdinalMap(-1, target_rank, {}); }

  /// Build from fiber sizes over [0..target]; sizes must sum to source_rank+1.
  static OrdinalMap from_fiber_sizes(std::span<const int> sizes) {
    std::vector<int> v;
    for (std::size_t k = 0; k < sizes.size(); ++k) {
      detail::require(sizes[k] >= 0, "negative fiber size");
      v.insert(v.end(), static_cast<std::size_t>(sizes[k]), static_cast<int>(k));
    }
    int src = static_cast<int>(v.size()) - 1;
    return OrdinalMap(src, static_cast<int>(sizes.size()) - 1, std::move(v));
  }

  int source_rank() const noexcept { return source_rank_; }
  int target_rank() const noexcept { return target_rank_; }
  std::span<const int> values() const noexcept { return values_; }
  int operator()(int i) const { return values_.at(static_cast<std::size_t>(i)); }

  bool is_identity() const noexcept {
    if (source_rank_ != target_rank_) return false;
    for (int i = 0; i <= source_rank_; ++i)
      if (values_[i] != i) return false;
    return true;
  }

  std::vector<int> fiber_sizes() const {
    std::vector<int> s(static_cast<std::size_t>(target_rank_ + 1), 0);
    for (int v : values_) ++s[v];
    return s;
  }

  /// First index of the fiber over each target point (prefix sums).
  std::vector<int> fiber_starts() const {
    std::vector<int> st(static_cast<std::size_t>(target_rank_ + 2), 0);
    for (int v : values_) ++st[v + 1];
    for (std::size_t k = 1; k < st.size(); ++k) st[k] += st[k - 1];
    return st;
  }

  friend bool operator==(const OrdinalMap&, const OrdinalMap&) = default;
  friend auto operator<=>(const OrdinalMap&, const OrdinalMap&) = default;

 private:
  int source_rank_ = -1;
  int target_rank_ = -1;
  std::vector<int> values_;
};

enum class GeneratorKind { face, degeneracy };

/// delta^i_n : [n-1] -> [n] (skips i) or sigma^i_n : [n+1] -> [n] (repeats i).
inline OrdinalMap generator(GeneratorKind kind, int i, int n) {
  detail::require(n >= 0 && i >= 0 && i <= n, "generator index out of range");
  std::vector<int> v;
  if (kind == GeneratorKind::face) {
    for (int k = 0; k < n; ++k) v.push_back(k < i ? k : k + 1);
    return OrdinalMap(n - 1, n, std::move(v));
  }
  for (int k = 0; k <= n + 1; ++k) v.push_back(k <= i ? k : k - 1);
  return OrdinalMap(n + 1, n, std::move(v));
}

inline OrdinalMap face(int i, int n) { return generator(GeneratorKind::face, i, n); }
inline OrdinalMap degeneracy(int i, int n) { return generator(GeneratorKind::degeneracy, i, n); }

/// g o f.
inline OrdinalMap compose(const OrdinalMap& g, const OrdinalMap& f) {
  detail::require(f.target_rank() == g.source_rank(), "compose_ordinal: rank mismatch");
  std::vector<int> v;
  v.reserve(f.values().size());
  for (int x : f.values()) v.push_back(g(x));
  return OrdinalMap(f.source_rank(), g.target_rank(), std::move(v));
}

/// Epi-mono factorization f = d^{i_1} ... d^{i_s} s^{j_1} ... s^{j_t} with
/// i_1 > ... > i_s and j_1 < ... < j_t (leftmost factor applied last).
struct NormalForm {
  std::vector<int> faces;
  std::vector<int> degeneracies;
  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

inline NormalForm normal_form(const OrdinalMap& f) {
  detail::require(f.source_rank() >= 0, "normal_form needs a nonempty source");
  NormalForm nf;
  std::vector<bool> hit(static_cast<std::size_t>(f.target_rank() + 1), false);
  for (int v : f.values()) hit[v] = true;
  for (int k = f.target_rank(); k >= 0; --k)
    if (!hit[k]) nf.faces.push_back(k);
  for (int j = 0; j < f.source_rank(); ++j)
    if (f(j) == f(j + 1)) nf.degeneracies.push_back(j);
  return nf;
}

inline OrdinalMap recompose(const NormalForm& nf, int source_rank) {
  OrdinalMap acc = OrdinalMap::identity(source_rank);
  for (auto it = nf.degeneracies.rbegin(); it != nf.degeneracies.rend(); ++it)
    acc = compose(degeneracy(*it, acc.target_rank() - 1), acc);
  for (auto it = nf.faces.rbegin(); it != nf.faces.rend(); ++it)
    acc = compose(face(*it, acc.target_rank() + 1), acc);
  return acc;
}

/// Ordinal sum in the <n> = [n-1] convention: f on the first block, g shifted.
inline OrdinalMap join(const OrdinalMap& f, const OrdinalMap& g) {
  const int n_src = f.source_rank() + 1, n_tgt = f.target_rank() + 1;
  const int m_src = g.source_rank() + 1, m_tgt = g.target_rank() + 1;
  std::vector<int> v(f.values().begin(), f.values().end());
  for (int x : g.values()) v.push_back(x + n_tgt);
  return OrdinalMap(n_src + m_src - 1, n_tgt + m_tgt - 1, std::move(v));
}

/// All order preserving maps [m] -> [n], lexicographic in value sequences.
inline std::vector<OrdinalMap> all_ordinal_maps(int m, int n) {
  std::vector<OrdinalMap> out;
  if (m == -1) {
    out.push_back(OrdinalMap::from_empty(n));
    return out;
  }
  if (n < 0) return out;
  std::vector<int> v(static_cast<std::size_t>(m + 1), 0);
  while (true) {
    out.emplace_back(m, n, v);
    int k = m;
    while (k >= 0 && v[k] == n) --k;
    if (k < 0) break;
    ++v[k];
    for (int r = k + 1; r <= m; ++r) v[r] = v[k];
  }
  return out;
}

/// Number of order preserving maps [m] -> [n]: binomial(m+n+1, m+1).
inline std::uint64_t count_ordinal_maps(int m, int n) {
  if (m == -1) return 1;
  if (n < 0) return 0;
  std::uint64_t r = 1;
  const int top = m + n + 1, k = m + 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(top - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

// Text forms.  Value literal: "[0 2 2]" (target = max value) or "[0 2 2]:3".
// Generator word: "d1 d0 s0", leftmost factor applied last; "id" for identity.

inline std::string to_literal(const OrdinalMap& f) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < f.values().size(); ++i) os << (i ? " " : "") << f.values()[i];
  os << ']';
  const int implied = f.values().empty() ? -1 : f.values().back();
  if (implied != f.target_rank()) os << ':' << f.target_rank();
  return os.str();
}

inline OrdinalMap parse_literal(std::string_view text) {
  auto open = text.find('['), close = text.find(']');
  if (open == std::string_view::npos || close == std::string_view::npos || close < open)
    throw parse_error("ordinal literal must look like [0 1 1]");
  std::istringstream is(std::string(text.substr(open + 1, close - open - 1)));
  std::vector<int> v;
  int x;
  while (is >> x) v.push_back(x);
  if (!is.eof()) throw parse_error("bad integer in ordinal literal");
  int target = v.empty() ? -1 : v.back();
  auto rest = text.substr(close + 1);
  if (!rest.empty()) {
    if (rest.front() != ':') throw parse_error("expected ':' after ordinal literal");
    try {
      target = std::stoi(std::string(rest.substr(1)));
    } catch (const std::exception&) {
      throw parse_error("bad target rank in ordinal literal");
    }
  }
  const int source = static_cast<int>(v.size()) - 1;
  try {
    return OrdinalMap(source, target, std::move(v));
  } catch (const argument_error& e) {
    throw parse_error(e.what());
  }
}

inline std::string to_word(const OrdinalMap& f) {
  auto nf = normal_form(f);
  std::ostringstream os;
  bool first = true;
  for (int i : nf.faces) os << (std::exchange(first, false) ? "" : " ") << 'd' << i;
  for (int j : nf.degeneracies) os << (std::exchange(first, false) ? "" : " ") << 's' << j;
  return first ? std::string("id") : os.str();
}

inline OrdinalMap parse_word(std::string_view text, int source_rank) {
  std::istringstream is{std::string(text)};
  std::vector<std::string> toks;
  for (std::string tok; is >> tok;) toks.push_back(tok);
  OrdinalMap acc = OrdinalMap::identity(source_rank);
  for (auto it = toks.rbegin(); it != toks.rend(); ++it) {
    const std::string& tok = *it;
    if (tok == "id") continue;
    if (tok.size() < 2 || (tok[0] != 'd' && tok[0] != 's')) throw parse_error("bad generator token '" + tok + "'");
    int i;
    try {
      i = std::stoi(tok.substr(1));
    } catch (const std::exception&) {
      throw parse_error("bad generator index in '" + tok + "'");
    }
    try {
      if (tok[0] == 'd')
        acc = compose(face(i, acc.target_rank() + 1), acc);
      else
        acc = compose(degeneracy(i, acc.target_rank() - 1), acc);
    } catch (const argument_error& e) {
      throw parse_error(std::string("generator does not apply: ") + e.what());
    }
  }
  return acc;
}

}  // namespace xsh
