#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "errors.hpp"

namespace coringlab {

/// Integers modulo a prime p. Scalars are kept in [0, p).
struct PrimeField {
  using value_type = std::uint64_t;

  std::uint64_t p = 2;

  PrimeField() = default;
  explicit PrimeField(std::uint64_t prime) : p(prime) {
    if (!is_prime(prime)) throw Error("field characteristic " + std::to_string(prime) + " is not prime");
    if (prime >= (std::uint64_t{1} << 31)) throw Error("prime too large for 64-bit products");
  }

  static bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type add(value_type a, value_type b) const { return (a + b) % p; }
  value_type sub(value_type a, value_type b) const { return (a + p - b) % p; }
  value_type neg(value_type a) const { return a == 0 ? 0 : p - a; }
  value_type mul(value_type a, value_type b) const { return (a * b) % p; }
  value_type inv(value_type a) const {
    if (a == 0) throw Error("division by zero in GF(" + std::to_string(p) + ")");
    // extended Euclid
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      std::int64_t tmp = t - q * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - q * new_r;
      r = new_r;
      new_r = tmp;
    }
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<value_type>(t);
  }
  value_type from_int(long long v) const {
    long long m = v % static_cast<long long>(p);
    if (m < 0) m += static_cast<long long>(p);
    return static_cast<value_type>(m);
  }
  bool is_zero(value_type a) const { return a == 0; }
  bool equal(value_type a, value_type b) const { return a == b; }
  std::string to_string(value_type a) const { return std::to_string(a); }
  value_type parse(const std::string& s) const {
    auto slash = s.find('/');
    if (slash != std::string::npos) {
      return mul(parse(s.substr(0, slash)), inv(parse(s.substr(slash + 1))));
    }
    std::size_t used = 0;
    long long v = std::stoll(s, &used);
    if (used != s.size()) throw Error("bad scalar '" + s + "'");
    return from_int(v);
  }
  /// Number of field elements, or 0 when infinite.
  std::uint64_t order() const { return p; }
  std::uint64_t characteristic() const { return p; }
  std::string name() const { return "GF(" + std::to_string(p) + ")"; }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p == b.p; }
};

/// The rationals, backed by GMP. mpq_class keeps values in lowest terms.
struct RationalField {
  using value_type = mpq_class;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type inv(const value_type& a) const {
    if (a == 0) throw Error("division by zero in Q");
    return value_type(1) / a;
  }
  value_type from_int(long long v) const { return value_type(static_cast<long>(v)); }
  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  bool equal(const value_type& a, const value_type& b) const { return a == b; }
  std::string to_string(const value_type& a) const { return a.get_str(); }
  value_type parse(const std::string& s) const {
    value_type v;
    if (v.set_str(s, 10) != 0) throw Error("bad rational '" + s + "'");
    v.canonicalize();
    return v;
  }
  std::uint64_t order() const { return 0; }
  std::uint64_t characteristic() const { return 0; }
  std::string name() const { return "Q"; }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

template <class F>
concept ExactField = requires(const F f, const typename F::value_type a, long long i) {
  { f.zero() } -> std::convertible_to<typename F::value_type>;
  { f.add(a, a) } -> std::convertible_to<typename F::value_type>;
  { f.mul(a, a) } -> std::convertible_to<typename F::value_type>;
  { f.inv(a) } -> std::convertible_to<typename F::value_type>;
  { f.from_int(i) } -> std::convertible_to<typename F::value_type>;
  { f.is_zero(a) } -> std::convertible_to<bool>;
  { f.name() } -> std::convertible_to<std::string>;
};

/// Runtime choice of ground field, as read from an instance file.
using FieldSpec = std::variant<PrimeField, RationalField>;

}  // namespace coringlab
