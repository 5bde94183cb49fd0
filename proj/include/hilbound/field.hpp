#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "hilbound/errors.hpp"

namespace hilbound {

// Arbitrary-precision integer / rational used for all formula arithmetic.
// Never floating point anywhere in this library.
using Int = mpz_class;
using Rat = mpq_class;

// mpz_class has no long long constructor; LP64 makes long wide enough
inline Int to_int(long long v) { return Int(static_cast<long>(v)); }

// Which coefficient field a computation runs over.
struct FieldTag {
  enum class Kind { rationals, prime };
  Kind kind = Kind::rationals;
  std::uint32_t modulus = 0;  // meaningful for Kind::prime only

  static FieldTag rationals() { return {Kind::rationals, 0}; }
  static FieldTag prime(std::uint32_t p) { return {Kind::prime, p}; }
  bool is_prime_field() const { return kind == Kind::prime; }
  bool operator==(const FieldTag&) const = default;

  std::string to_string() const {
    return is_prime_field() ? "F" + std::to_string(modulus) : "Q";
  }
  // Accepts "Q" or "F<p>", e.g. "F32003".
  static FieldTag parse(const std::string& s);
};

// The default prime for generic-coefficient computations.
inline constexpr std::uint32_t kDefaultPrime = 32003;

// F_p with a runtime modulus. Elements are residues in [0, p); the field
// object carries the modulus and all the operations, so elements stay POD.
class PrimeField {
 public:
  using Elem = std::uint32_t;

  explicit PrimeField(std::uint32_t p);

  std::uint32_t modulus() const { return p_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1 % p_; }
  bool is_zero(Elem a) const { return a == 0; }

  Elem from_int(const Int& n) const;
  Elem from_long(long long n) const;

  Elem add(Elem a, Elem b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>(std::uint64_t(a) * b % p_);
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  std::string to_string(Elem a) const { return std::to_string(a); }

 private:
  std::uint32_t p_;
};

// Exact rationals. Stateless; mirrors PrimeField's interface so templated
// code can run over either field.
struct RationalField {
  using Elem = Rat;

  Elem zero() const { return Rat(0); }
  Elem one() const { return Rat(1); }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }

  Elem from_int(const Int& n) const { return Rat(n); }
  Elem from_long(long long n) const { return Rat(static_cast<long>(n)); }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const {
    if (sgn(a) == 0) throw internal_error("division by zero in Q");
    return 1 / a;
  }
  Elem div(const Elem& a, const Elem& b) const { return a * inv(b); }

  std::string to_string(const Elem& a) const { return a.get_str(); }
};

}  // namespace hilbound
