#pragma once

// Exact coefficient rings: the prime fields F_p (p < 2^31), the rationals and
// the integers.  Each is a small value type exposing Element and the ring
// operations, so engines are written once as templates and dispatched at run
// time through visit_ring.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <stdexcept>
#include <string_view>
#include <utility>

#include "xsh/error.hpp"

namespace xsh {

inline bool is_prime_u32(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

class PrimeField {
 public:
  using Element = std::uint32_t;
  static constexpr bool is_field = true;

  explicit PrimeField(std::uint32_t p) : p_(p) {
    detail::require(p < (1u << 31) && is_prime_u32(p), "F_p needs a prime p < 2^31");
  }

  std::uint32_t characteristic() const noexcept { return p_; }
  std::string name() const { return "F" + std::to_string(p_); }

  Element zero() const noexcept { return 0; }
  Element one() const noexcept { return 1; }
  bool is_zero(Element a) const noexcept { return a == 0; }
  bool is_one(Element a) const noexcept { return a == 1; }

  Element add(Element a, Element b) const noexcept {
    const std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Element neg(Element a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const noexcept {
    return static_cast<Element>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Element inv(Element a) const {
    detail::require(a != 0, "division by zero in F_p");
    std::int64_t t = 0, nt = 1, r = p_, nr = a;
    while (nr != 0) {
      const std::int64_t q = r / nr;
      t = std::exchange(nt, t - q * nt);
      r = std::exchange(nr, r - q * nr);
    }
    return static_cast<Element>(t < 0 ? t + p_ : t);
  }
  Element div(Element a, Element b) const { return mul(a, inv(b)); }

  Element from_int(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Element>(r < 0 ? r + p_ : r);
  }
  Element from_mpz(const mpz_class& v) const {
    mpz_class r = v % p_;
    if (r < 0) r += p_;
    return static_cast<Element>(r.get_ui());
  }
  Element from_mpq(const mpq_class& v) const {
    const Element den = from_mpz(v.get_den());
    if (den == 0) throw argument_error("rational value has denominator divisible by p");
    return div(from_mpz(v.get_num()), den);
  }
  std::string to_string(Element a) const { return std::to_string(a); }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

class RationalField {
 public:
  using Element = mpq_class;
  static constexpr bool is_field = true;

  std::uint32_t characteristic() const noexcept { return 0; }
  std::string name() const { return "Q"; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool is_one(const Element& a) const { return a == 1; }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element inv(const Element& a) const {
    detail::require(sgn(a) != 0, "division by zero in Q");
    return 1 / a;
  }
  Element div(const Element& a, const Element& b) const { return a * inv(b); }
  Element from_int(std::int64_t v) const { return mpq_class(mpz_class(std::to_string(v))); }
  Element from_mpz(const mpz_class& v) const { return mpq_class(v); }
  Element from_mpq(const mpq_class& v) const { return v; }
  std::string to_string(const Element& a) const { return a.get_str(); }

  friend bool operator==(const RationalField&, const RationalField&) = default;
};

class IntegerRing {
 public:
  using Element = mpz_class;
  static constexpr bool is_field = false;

  std::uint32_t characteristic() const noexcept { return 0; }
  std::string name() const { return "Z"; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool is_one(const Element& a) const { return a == 1; }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element from_int(std::int64_t v) const { return mpz_class(std::to_string(v)); }
  Element from_mpz(const mpz_class& v) const { return v; }
  Element from_mpq(const mpq_class& v) const {
    if (v.get_den() != 1) throw argument_error("non-integral value over Z: " + v.get_str());
    return v.get_num();
  }
  std::string to_string(const Element& a) const { return a.get_str(); }

  friend bool operator==(const IntegerRing&, const IntegerRing&) = default;
};

/// Run-time description of a coefficient ring: "Q", "Z" or "Fp:<p>".
struct Ring {
  enum class Kind { rational, prime, integer };
  Kind kind = Kind::rational;
  std::uint32_t p = 0;

  static Ring rationals() { return {Kind::rational, 0}; }
  static Ring integers() { return {Kind::integer, 0}; }
  static Ring prime(std::uint32_t p) {
    PrimeField check(p);
    (void)check;
    return {Kind::prime, p};
  }

  bool is_field() const noexcept { return kind != Kind::integer; }
  std::uint32_t characteristic() const noexcept { return kind == Kind::prime ? p : 0; }

  friend bool operator==(const Ring&, const Ring&) = default;
};

inline std::string to_string(const Ring& r) {
  switch (r.kind) {
    case Ring::Kind::rational: return "Q";
    case Ring::Kind::integer: return "Z";
    case Ring::Kind::prime: return "Fp:" + std::to_string(r.p);
  }
  return "?";
}

inline Ring parse_ring(std::string_view s) {
  if (s == "Q") return Ring::rationals();
  if (s == "Z") return Ring::integers();
  if (s.substr(0, 3) == "Fp:") {
    try {
      std::size_t used = 0;
      const long long p = std::stoll(std::string(s.substr(3)), &used);
      if (used != s.size() - 3 || p < 2 || p >= (1ll << 31)) throw parse_error("Fp needs a prime below 2^31: '" + std::string(s) + "'");
      return Ring::prime(static_cast<std::uint32_t>(p));
    } catch (const argument_error&) {
      throw parse_error("Fp needs a prime below 2^31: '" + std::string(s) + "'");
    } catch (const std::logic_error&) {
      throw parse_error("bad ring '" + std::string(s) + "'");
    }
  }
  throw parse_error("unknown ring '" + std::string(s) + "' (expected Q, Z or Fp:<p>)");
}

template <class Fn>
decltype(auto) visit_ring(const Ring& r, Fn&& fn) {
  switch (r.kind) {
    case Ring::Kind::prime: return fn(PrimeField(r.p));
    case Ring::Kind::integer: return fn(IntegerRing());
    case Ring::Kind::rational: break;
  }
  return fn(RationalField());
}

/// Same, restricted to fields; integers are rejected with an argument error.
template <class Fn>
decltype(auto) visit_field(const Ring& r, Fn&& fn) {
  detail::require(r.is_field(), "this computation needs a field (Q or Fp:<p>)");
  if (r.kind == Ring::Kind::prime) return fn(PrimeField(r.p));
  return fn(RationalField());
}

}  // namespace xsh
