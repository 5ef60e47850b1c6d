// Exact field elements: rationals (GMP-backed) and residues mod an odd prime,
// behind one runtime-tagged Scalar so matrices and algebras can be built over
// either field from the same code paths. Mixing fields throws.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <variant>

#include "lsc/errors.h"

namespace lsc {

struct Field {
  std::uint32_t p = 0;  // 0 = rationals, otherwise an odd prime

  static Field rationals() { return Field{0}; }
  static Field prime(std::uint32_t p);  // checks oddness + primality

  bool is_rational() const { return p == 0; }
  std::uint32_t characteristic() const { return p; }
  std::string str() const { return p == 0 ? "Q" : "Fp:" + std::to_string(p); }
  static Field parse(const std::string& s);

  friend bool operator==(Field a, Field b) { return a.p == b.p; }
  friend bool operator!=(Field a, Field b) { return a.p != b.p; }
};

class Scalar {
 public:
  Scalar() : Scalar(Field::rationals()) {}  // zero of Q
  explicit Scalar(Field f);                 // zero of f

  static Scalar zero(Field f) { return Scalar(f); }
  static Scalar one(Field f);
  static Scalar integer(long v, Field f);
  static Scalar rational(long num, long den);          // Q only
  static Scalar from_mpq(const mpq_class& q);          // Q only
  static Scalar residue(long v, std::uint32_t p);      // F_p only
  static Scalar parse(const std::string& s, Field f);  // "-3/2", "7"

  Field field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;
  bool is_integer() const;  // Q: denominator 1; F_p: always

  // Q accessors (throw on F_p)
  const mpq_class& rational_value() const;
  // F_p accessor (throws on Q); value in [0, p)
  std::uint64_t residue_value() const;
  // integer view: Q with denominator 1 or a lifted residue in [0, p)
  mpz_class integer_value() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);  // throws DomainError on zero divisor
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  Scalar inverse() const;
  Scalar pow(std::uint64_t e) const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  std::string str() const;  // "-3/2", "2 mod 5"

 private:
  struct Fp {
    std::uint64_t v;
    friend bool operator==(Fp a, Fp b) { return a.v == b.v; }
  };

  Field field_;
  std::variant<mpq_class, Fp> value_;

  void check_same_field(const Scalar& o) const;
  static std::uint64_t reduce(long v, std::uint32_t p);
};

}  // namespace lsc
