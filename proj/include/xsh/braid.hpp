#pragma once

// Braid words in Artin generators, the Lawrence-Krammer-Bigelow
// representation used as the word-problem oracle, and the strand-level
// operations of the braided crossed simplicial group: projection to the
// symmetric group, cabling along an ordinal map, block braidings and strand
// substitution.
//
// Conventions.  A word is a sequence of nonzero integers; +i is sigma_i (the
// strand at position i-1 crosses over the strand at position i, positions
// 0-based) and -i is its inverse.  Words are read left to right from the
// bottom of the diagram to the top.  project(w) is the product of the
// transpositions in word order, so it is a homomorphism and sends a top
// position to the bottom position of the same strand.

#include <cstdlib>
#include <memory>
#include <mutex>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "xsh/error.hpp"
#include "xsh/laurent.hpp"
#include "xsh/ordinal.hpp"
#include "xsh/permutation.hpp"

namespace xsh {

class Braid;
LaurentMatrix compute_lk_matrix(int strands, std::span<const int> word);

class Braid {
 public:
  Braid() : Braid(1) {}

  explicit Braid(int strands, std::vector<int> word = {})
      : strands_(strands), word_(std::move(word)), cache_(std::make_shared<Cache>()) {
    detail::require(strands >= 0, "braid strand count must be nonnegative");
    for (int g : word_)
      detail::require(g != 0 && std::abs(g) <= strands - 1, "braid generator index out of range");
  }

  static Braid identity(int strands) { return Braid(strands); }

  /// sigma_i^{+-1}, 1 <= i <= strands-1.
  static Braid generator(int strands, int i, bool inverse = false) {
    return Braid(strands, {inverse ? -i : i});
  }

  int strands() const noexcept { return strands_; }
  std::span<const int> word() const noexcept { return word_; }
  std::size_t length() const noexcept { return word_.size(); }

  int exponent_sum() const noexcept {
    int s = 0;
    for (int g : word_) s += g > 0 ? 1 : -1;
    return s;
  }

  Braid inverse() const {
    std::vector<int> w(word_.rbegin(), word_.rend());
    for (int& g : w) g = -g;
    return Braid(strands_, std::move(w));
  }

  /// Cancel adjacent sigma_i sigma_i^{-1} pairs.
  Braid freely_reduced() const {
    std::vector<int> w;
    w.reserve(word_.size());
    for (int g : word_) {
      if (!w.empty() && w.back() == -g)
        w.pop_back();
      else
        w.push_back(g);
    }
    return Braid(strands_, std::move(w));
  }

  /// Word concatenation: *this below, rhs above.
  friend Braid operator*(const Braid& lhs, const Braid& rhs) {
    detail::require(lhs.strands_ == rhs.strands_, "braid product: strand count mismatch");
    std::vector<int> w(lhs.word_);
    w.insert(w.end(), rhs.word_.begin(), rhs.word_.end());
    return Braid(lhs.strands_, std::move(w));
  }

  /// Memoized representation matrix; computed once per braid value even
  /// under concurrent access.
  const LaurentMatrix& matrix() const {
    std::call_once(cache_->once, [this] { cache_->matrix = compute_lk_matrix(strands_, word_); });
    return cache_->matrix;
  }

  bool same_word(const Braid& other) const { return strands_ == other.strands_ && word_ == other.word_; }

 private:
  struct Cache {
    std::once_flag once;
    LaurentMatrix matrix;
  };

  int strands_;
  std::vector<int> word_;
  std::shared_ptr<Cache> cache_;
};

namespace detail {

/// Index of the basis vector v_{j,k} (1-based, j < k) in lexicographic order.
class PairIndex {
 public:
  explicit PairIndex(int n) : n_(n), table_(static_cast<std::size_t>((n + 2) * (n + 2)), -1) {
    int idx = 0;
    for (int j = 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) table_[static_cast<std::size_t>(j * (n + 2) + k)] = idx++;
    size_ = idx;
  }
  int operator()(int j, int k) const { return table_[static_cast<std::size_t>(j * (n_ + 2) + k)]; }
  int size() const noexcept { return size_; }

 private:
  int n_;
  int size_ = 0;
  std::vector<int> table_;
};

struct LkEntry {
  int row;
  LaurentPoly coeff;
};

inline LaurentPoly lp(std::vector<LaurentTerm> terms) { return LaurentPoly::from_terms(std::move(terms)); }

/// Image of basis vector v_{j,k} under sigma_i (inverse = false) or
/// sigma_i^{-1}, in the Bigelow normalization.
inline std::vector<LkEntry> lk_image(const PairIndex& ix, int i, int j, int k, bool inverse) {
  std::vector<LkEntry> out;
  auto add = [&](int a, int b, LaurentPoly c) { out.push_back({ix(a, b), std::move(c)}); };
  if (!inverse) {
    if (i == j && i == k - 1) {
      add(j, k, lp({{2, 1, -1}}));
    } else if (i == j - 1) {
      add(i, k, lp({{1, 0, 1}}));
      add(i, j, lp({{2, 0, 1}, {1, 0, -1}}));
      add(j, k, lp({{0, 0, 1}, {1, 0, -1}}));
    } else if (i == j) {
      add(j + 1, k, LaurentPoly::one());
    } else if (i == k - 1) {
      add(j, i, lp({{1, 0, 1}}));
      add(j, k, lp({{0, 0, 1}, {1, 0, -1}}));
      add(i, k, lp({{2, 1, -1}, {1, 1, 1}}));
    } else if (i == k) {
      add(j, k + 1, LaurentPoly::one());
    } else {
      add(j, k, LaurentPoly::one());
    }
  } else {
    if (i == j - 1) {
      add(i, k, LaurentPoly::one());
    } else if (i == j && i == k - 1) {
      add(j, k, lp({{-2, -1, -1}}));
    } else if (i == k - 1) {
      add(j, i, LaurentPoly::one());
    } else if (i == j) {
      add(j, k, lp({{0, 0, 1}, {-1, 0, -1}}));
      add(j + 1, k, lp({{-1, 0, 1}}));
      add(i, i + 1, lp({{-1, -1, 1}, {-2, -1, -1}}));
    } else if (i == k) {
      add(j, k, lp({{0, 0, 1}, {-1, 0, -1}}));
      add(j, k + 1, lp({{-1, 0, 1}}));
      add(k, k + 1, lp({{-1, 0, -1}, {-2, 0, 1}}));
    } else {
      add(j, k, LaurentPoly::one());
    }
  }
  return out;
}

}  // namespace detail

/// Representation matrix of a single generator letter (columns are images).
inline LaurentMatrix lk_generator_matrix(int strands, int letter) {
  detail::PairIndex ix(strands);
  LaurentMatrix g(ix.size());
  const int i = std::abs(letter);
  for (int j = 1; j <= strands; ++j)
    for (int k = j + 1; k <= strands; ++k)
      for (auto& e : detail::lk_image(ix, i, j, k, letter < 0)) g.at(e.row, ix(j, k)) = g.at(e.row, ix(j, k)) + e.coeff;
  return g;
}

/// Product of generator matrices in word order, by sparse column updates.
inline LaurentMatrix compute_lk_matrix(int strands, std::span<const int> word) {
  detail::PairIndex ix(strands);
  LaurentMatrix m = LaurentMatrix::identity(ix.size());
  std::vector<LaurentPoly> col(static_cast<std::size_t>(ix.size()));
  std::vector<std::pair<int, std::vector<LaurentPoly>>> updates;
  for (int letter : word) {
    const int i = std::abs(letter);
    updates.clear();
    for (int j = 1; j <= strands; ++j)
      for (int k = j + 1; k <= strands; ++k) {
        auto img = detail::lk_image(ix, i, j, k, letter < 0);
        const int s = ix(j, k);
        if (img.size() == 1 && img[0].row == s && img[0].coeff == LaurentPoly::one()) continue;
        std::vector<LaurentPoly> newcol(static_cast<std::size_t>(ix.size()));
        for (const auto& e : img)
          for (const auto& term : e.coeff.terms())
            for (int r = 0; r < ix.size(); ++r) {
              const auto& src = m.at(r, e.row);
              if (!src.is_zero()) newcol[r] = newcol[r] + src.scaled(term.c, term.q, term.t);
            }
        updates.emplace_back(s, std::move(newcol));
      }
    for (auto& [s, c] : updates)
      for (int r = 0; r < ix.size(); ++r) m.at(r, s) = std::move(c[r]);
  }
  return m;
}

inline const LaurentMatrix& lk_matrix(const Braid& b) { return b.matrix(); }

inline Permutation project(const Braid& b) {
  std::vector<int> img(static_cast<std::size_t>(b.strands()));
  std::iota(img.begin(), img.end(), 0);
  for (int g : b.word()) {
    const int i = std::abs(g);
    std::swap(img[i - 1], img[i]);
  }
  return Permutation(std::move(img));
}

/// Equality in B_n.  Cheap invariants reject first; equal reduced words accept;
/// otherwise the faithful representation decides.
inline bool braid_eq(const Braid& a, const Braid& b) {
  detail::require(a.strands() == b.strands(), "braid_eq: strand count mismatch");
  if (a.same_word(b)) return true;
  if (a.exponent_sum() != b.exponent_sum()) return false;
  if (project(a) != project(b)) return false;
  if (a.freely_reduced().same_word(b.freely_reduced())) return true;
  return lk_matrix(a) == lk_matrix(b);
}

/// Disjoint union: a on the left strands, b on the right.
inline Braid braid_sum(const Braid& a, const Braid& b) {
  std::vector<int> w(a.word().begin(), a.word().end());
  for (int g : b.word()) w.push_back(g > 0 ? g + a.strands() : g - a.strands());
  return Braid(a.strands() + b.strands(), std::move(w));
}

namespace detail {

/// Block of `left` strands starting at 1-based position `pos` crossing the
/// adjacent block of `right` strands, every pair with the same sign.
inline void append_block_crossing(std::vector<int>& w, int pos, int left, int right, bool positive) {
  for (int r = 1; r <= left; ++r)
    for (int c = 1; c <= right; ++c) {
      const int g = pos - 1 + left - r + c;
      w.push_back(positive ? g : -g);
    }
}

}  // namespace detail

/// Replace the strand ending at bottom position k by bottom_sizes[k] parallel
/// strands (none when the size is zero).
inline Braid cable_by_sizes(const Braid& b, std::span<const int> bottom_sizes) {
  detail::require(static_cast<int>(bottom_sizes.size()) == b.strands(), "cable: size list length mismatch");
  std::vector<int> cur(bottom_sizes.begin(), bottom_sizes.end());
  int total = 0;
  for (int s : cur) {
    detail::require(s >= 0, "cable: negative block size");
    total += s;
  }
  std::vector<int> w;
  for (int g : b.word()) {
    const int i = std::abs(g);
    int pos = 1;
    for (int x = 0; x < i - 1; ++x) pos += cur[x];
    detail::append_block_crossing(w, pos, cur[i - 1], cur[i], g > 0);
    std::swap(cur[i - 1], cur[i]);
  }
  return Braid(total, std::move(w));
}

/// phi^* b for phi : [m] -> [n] and b on n+1 strands.
inline Braid cable(const OrdinalMap& phi, const Braid& b) {
  detail::require(b.strands() == phi.target_rank() + 1, "cable: rank mismatch");
  const auto sizes = phi.fiber_sizes();
  return cable_by_sizes(b, sizes);
}

/// b_{n,m}: the left n strands pass over the right m strands.
inline Braid braiding(int n, int m) {
  detail::require(n >= 0 && m >= 0, "braiding: negative size");
  std::vector<int> w;
  detail::append_block_crossing(w, 1, n, m, true);
  return Braid(n + m, std::move(w));
}

/// Strand substitution: the strand at top position p of b is replaced by
/// subs[p], which sits above the cabled copy of b.
inline Braid omega(const Braid& b, std::span<const Braid> subs) {
  detail::require(static_cast<int>(subs.size()) == b.strands(), "omega: need one braid per strand");
  const Permutation pi = project(b);
  std::vector<int> bottom(subs.size());
  for (int p = 0; p < b.strands(); ++p) bottom[pi(p)] = subs[p].strands();
  Braid out = cable_by_sizes(b, bottom);
  Braid top = Braid::identity(0);
  for (const auto& s : subs) top = braid_sum(top, s);
  return out * top;
}

/// Positive permutation braid (every pair of strands crosses at most once).
inline Braid permutation_braid(const Permutation& gamma) {
  std::vector<int> img(gamma.images().begin(), gamma.images().end());
  std::vector<int> rev;
  bool again = true;
  while (again) {
    again = false;
    for (int i = 0; i + 1 < static_cast<int>(img.size()); ++i)
      if (img[i] > img[i + 1]) {
        std::swap(img[i], img[i + 1]);
        rev.push_back(i + 1);
        again = true;
      }
  }
  return Braid(gamma.size(), std::vector<int>(rev.rbegin(), rev.rend()));
}

/// "B4: s1 s2 s1^-1".
inline std::string to_string(const Braid& b) {
  std::ostringstream os;
  os << 'B' << b.strands() << ':';
  for (int g : b.word()) os << " s" << std::abs(g) << (g < 0 ? "^-1" : "");
  return os.str();
}

inline Braid parse_braid(std::string_view text) {
  const auto colon = text.find(':');
  if (text.empty() || text[0] != 'B' || colon == std::string_view::npos)
    throw parse_error("braid must look like 'B4: s1 s2^-1'");
  int strands;
  try {
    strands = std::stoi(std::string(text.substr(1, colon - 1)));
  } catch (const std::exception&) {
    throw parse_error("bad strand count in braid");
  }
  std::istringstream is{std::string(text.substr(colon + 1))};
  std::vector<int> w;
  for (std::string tok; is >> tok;) {
    if (tok.size() < 2 || tok[0] != 's') throw parse_error("bad braid token '" + tok + "'");
    bool inv = false;
    std::string body = tok.substr(1);
    if (auto caret = body.find('^'); caret != std::string::npos) {
      if (body.substr(caret) != "^-1") throw parse_error("only ^-1 exponents are supported: '" + tok + "'");
      inv = true;
      body = body.substr(0, caret);
    }
    int i;
    try {
      std::size_t used = 0;
      i = std::stoi(body, &used);
      if (used != body.size()) throw parse_error("bad generator index");
    } catch (const std::invalid_argument&) {
      throw parse_error("bad generator index in '" + tok + "'");
    }
    w.push_back(inv ? -i : i);
  }
  try {
    return Braid(strands, std::move(w));
  } catch (const argument_error& e) {
    throw parse_error(e.what());
  }
}

}  // namespace xsh
