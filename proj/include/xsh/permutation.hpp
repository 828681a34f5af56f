#pragma once

// Permutations of {0, ..., n-1} and the two crossed-simplicial star
// operations between permutations and order preserving maps.

#include <compare>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "xsh/error.hpp"
#include "xsh/ordinal.hpp"

namespace xsh {

class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
      detail::require(v >= 0 && v < size() && !seen[v], "permutation images must form a bijection");
      seen[v] = true;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 0);
    return Permutation(std::move(v));
  }

  static Permutation transposition(int n, int a, int b) {
    auto p = identity(n);
    detail::require(a >= 0 && a < n && b >= 0 && b < n, "transposition index out of range");
    std::swap(p.images_[a], p.images_[b]);
    return p;
  }

  /// j -> j+1 mod n.
  static Permutation rotation(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) v[j] = (j + 1) % n;
    return Permutation(std::move(v));
  }

  int size() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_.at(static_cast<std::size_t>(i)); }
  std::span<const int> images() const noexcept { return images_; }

  bool is_identity() const noexcept {
    for (int i = 0; i < size(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  int inversions() const noexcept {
    int c = 0;
    for (int i = 0; i < size(); ++i)
      for (int j = i + 1; j < size(); ++j) c += images_[i] > images_[j];
    return c;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// (a o b)(i) = a(b(i)).
inline Permutation perm_compose(const Permutation& a, const Permutation& b) {
  detail::require(a.size() == b.size(), "perm_compose: size mismatch");
  std::vector<int> v(static_cast<std::size_t>(a.size()));
  for (int i = 0; i < a.size(); ++i) v[i] = a(b(i));
  return Permutation(std::move(v));
}

inline Permutation perm_inverse(const Permutation& a) {
  std::vector<int> v(static_cast<std::size_t>(a.size()));
  for (int i = 0; i < a.size(); ++i) v[a(i)] = i;
  return Permutation(std::move(v));
}

inline Permutation direct_sum(std::span<const Permutation> parts) {
  std::vector<int> v;
  int offset = 0;
  for (const auto& p : parts) {
    for (int x : p.images()) v.push_back(x + offset);
    offset += p.size();
  }
  return Permutation(std::move(v));
}

inline Permutation direct_sum(const Permutation& a, const Permutation& b) {
  const Permutation parts[] = {a, b};
  return direct_sum(std::span<const Permutation>(parts));
}

/// sigma(j_1, ..., j_n): block i (length sizes[i]) is moved to block position
/// sigma(i), order kept inside each block.
inline Permutation block_perm(const Permutation& sigma, std::span<const int> sizes) {
  detail::require(static_cast<int>(sizes.size()) == sigma.size(), "block_perm: length mismatch");
  const int n = sigma.size();
  const Permutation inv = perm_inverse(sigma);
  std::vector<int> new_start(static_cast<std::size_t>(n) + 1, 0);
  for (int p = 0; p < n; ++p) {
    detail::require(sizes[inv(p)] >= 0, "block_perm: negative block size");
    new_start[p + 1] = new_start[p] + sizes[inv(p)];
  }
  std::vector<int> v;
  v.reserve(static_cast<std::size_t>(new_start[n]));
  for (int i = 0; i < n; ++i)
    for (int o = 0; o < sizes[i]; ++o) v.push_back(new_start[sigma(i)] + o);
  return Permutation(std::move(v));
}

/// gamma^* phi: the order preserving map whose fiber over k has the size of
/// phi^{-1}(gamma(k)).  gamma permutes the target labels of phi.
inline OrdinalMap perm_star_ordinal(const Permutation& gamma, const OrdinalMap& phi) {
  detail::require(gamma.size() == phi.target_rank() + 1, "perm_star_ordinal: size mismatch");
  const auto sizes = phi.fiber_sizes();
  std::vector<int> out(sizes.size());
  for (int k = 0; k < gamma.size(); ++k) out[k] = sizes[gamma(k)];
  return OrdinalMap::from_fiber_sizes(out);
}

/// phi^* gamma: the permutation P of [m] with gamma o (gamma^* phi) = phi o P
/// that is order preserving on every fiber of gamma^* phi.
inline Permutation ordinal_star_perm(const OrdinalMap& phi, const Permutation& gamma) {
  detail::require(gamma.size() == phi.target_rank() + 1, "ordinal_star_perm: size mismatch");
  const OrdinalMap moved = perm_star_ordinal(gamma, phi);
  const auto moved_start = moved.fiber_starts();
  const auto phi_start = phi.fiber_starts();
  std::vector<int> v(static_cast<std::size_t>(phi.source_rank() + 1));
  for (int i = 0; i <= phi.source_rank(); ++i) {
    const int k = moved(i);
    v[i] = phi_start[gamma(k)] + (i - moved_start[k]);
  }
  Permutation p(std::move(v));
  for (int i = 0; i <= phi.source_rank(); ++i)
    detail::ensure(gamma(moved(i)) == phi(p(i)), "ordinal_star_perm: square does not commute");
  return p;
}

inline std::string to_string(const Permutation& p) {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < p.size(); ++i) os << (i ? " " : "") << p(i);
  os << ')';
  return os.str();
}

}  // namespace xsh
