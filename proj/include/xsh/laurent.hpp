#pragma once

// Integer Laurent polynomials in two commuting variables q, t and square
// matrices over them.  Exact; coefficient overflow throws.

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "xsh/error.hpp"

namespace xsh {

struct LaurentTerm {
  std::int32_t q = 0;
  std::int32_t t = 0;
  std::int64_t c = 0;
  friend bool operator==(const LaurentTerm&, const LaurentTerm&) = default;
};

namespace detail {

inline bool term_less(const LaurentTerm& a, const LaurentTerm& b) noexcept {
  return std::tie(a.q, a.t) < std::tie(b.q, b.t);
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Laurent coefficient overflow");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Laurent coefficient overflow");
  return r;
}

}  // namespace detail

class LaurentPoly {
 public:
  LaurentPoly() = default;

  static LaurentPoly monomial(std::int64_t c, int q_exp = 0, int t_exp = 0) {
    LaurentPoly p;
    if (c != 0) p.terms_.push_back({q_exp, t_exp, c});
    return p;
  }
  static LaurentPoly one() { return monomial(1); }

  /// Sum of (coefficient, q exponent, t exponent) triples.
  static LaurentPoly from_terms(std::vector<LaurentTerm> terms) {
    LaurentPoly p;
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
  }

  bool is_zero() const noexcept { return terms_.empty(); }
  const std::vector<LaurentTerm>& terms() const noexcept { return terms_; }

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto i = a.terms_.begin(), j = b.terms_.begin();
    while (i != a.terms_.end() || j != b.terms_.end()) {
      if (j == b.terms_.end() || (i != a.terms_.end() && detail::term_less(*i, *j))) {
        r.terms_.push_back(*i++);
      } else if (i == a.terms_.end() || detail::term_less(*j, *i)) {
        r.terms_.push_back(*j++);
      } else {
        const std::int64_t c = detail::checked_add(i->c, j->c);
        if (c != 0) r.terms_.push_back({i->q, i->t, c});
        ++i, ++j;
      }
    }
    return r;
  }

  LaurentPoly operator-() const {
    LaurentPoly r = *this;
    for (auto& term : r.terms_) term.c = detail::checked_mul(term.c, -1);
    return r;
  }

  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

  /// c * q^qe * t^te * p.
  LaurentPoly scaled(std::int64_t c, int qe, int te) const {
    LaurentPoly r;
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& term : terms_) r.terms_.push_back({term.q + qe, term.t + te, detail::checked_mul(term.c, c)});
    return r;
  }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& term : b.terms_) r = r + a.scaled(term.c, term.q, term.t);
    return r;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& term : terms_) {
      if (!first) os << (term.c < 0 ? " - " : " + ");
      else if (term.c < 0) os << '-';
      first = false;
      const std::int64_t a = term.c < 0 ? -term.c : term.c;
      const bool bare = term.q == 0 && term.t == 0;
      if (a != 1 || bare) os << a;
      if (term.q != 0) os << (a != 1 ? "*" : "") << "q^" << term.q;
      if (term.t != 0) os << ((a != 1 || term.q != 0) ? "*" : "") << "t^" << term.t;
    }
    return os.str();
  }

 private:
  void normalize() {
    std::sort(terms_.begin(), terms_.end(), detail::term_less);
    std::vector<LaurentTerm> out;
    for (const auto& term : terms_) {
      if (!out.empty() && out.back().q == term.q && out.back().t == term.t)
        out.back().c = detail::checked_add(out.back().c, term.c);
      else
        out.push_back(term);
      if (out.back().c == 0) out.pop_back();
    }
    terms_ = std::move(out);
  }

  std::vector<LaurentTerm> terms_;
};

/// Square matrix stored column by column.
class LaurentMatrix {
 public:
  LaurentMatrix() = default;
  explicit LaurentMatrix(int dim) : dim_(dim), data_(static_cast<std::size_t>(dim) * dim) {}

  static LaurentMatrix identity(int dim) {
    LaurentMatrix m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = LaurentPoly::one();
    return m;
  }

  int dim() const noexcept { return dim_; }
  LaurentPoly& at(int row, int col) { return data_[static_cast<std::size_t>(col) * dim_ + row]; }
  const LaurentPoly& at(int row, int col) const { return data_[static_cast<std::size_t>(col) * dim_ + row]; }

  bool is_identity() const {
    for (int c = 0; c < dim_; ++c)
      for (int r = 0; r < dim_; ++r) {
        const auto& e = at(r, c);
        if (r == c ? !(e == LaurentPoly::one()) : !e.is_zero()) return false;
      }
    return true;
  }

  friend bool operator==(const LaurentMatrix&, const LaurentMatrix&) = default;

  friend LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
    detail::require(a.dim_ == b.dim_, "LaurentMatrix product: dimension mismatch");
    LaurentMatrix r(a.dim_);
    for (int c = 0; c < a.dim_; ++c)
      for (int k = 0; k < a.dim_; ++k) {
        const auto& bkc = b.at(k, c);
        if (bkc.is_zero()) continue;
        for (int row = 0; row < a.dim_; ++row)
          if (!a.at(row, k).is_zero()) r.at(row, c) = r.at(row, c) + a.at(row, k) * bkc;
      }
    return r;
  }

 private:
  int dim_ = 0;
  std::vector<LaurentPoly> data_;
};

}  // namespace xsh
