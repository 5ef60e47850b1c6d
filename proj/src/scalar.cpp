#include "lsc/scalar.h"

#include <cstdlib>

namespace lsc {

namespace {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// extended Euclid inverse of v mod p, v != 0
std::uint64_t mod_inverse(std::uint64_t v, std::uint64_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(v);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t -= q * new_t; std::swap(t, new_t);
    r -= q * new_r; std::swap(r, new_r);
  }
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (p == 2) throw ParameterError("field characteristic 2 is not supported");
  if (!is_prime(p)) throw ParameterError("field modulus " + std::to_string(p) + " is not prime");
  return Field{p};
}

Field Field::parse(const std::string& s) {
  if (s == "Q") return rationals();
  if (s.rfind("Fp:", 0) == 0) {
    char* end = nullptr;
    unsigned long p = std::strtoul(s.c_str() + 3, &end, 10);
    if (end == nullptr || *end != '\0' || p == 0)
      throw ParseError("bad field spec '" + s + "' (expected Q or Fp:<p>)");
    return prime(static_cast<std::uint32_t>(p));
  }
  throw ParseError("bad field spec '" + s + "' (expected Q or Fp:<p>)");
}

Scalar::Scalar(Field f) : field_(f) {
  if (f.is_rational())
    value_ = mpq_class(0);
  else
    value_ = Fp{0};
}

Scalar Scalar::one(Field f) { return integer(1, f); }

Scalar Scalar::integer(long v, Field f) {
  Scalar s(f);
  if (f.is_rational())
    s.value_ = mpq_class(v);
  else
    s.value_ = Fp{reduce(v, f.p)};
  return s;
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Scalar s(Field::rationals());
  mpq_class q(num, den);
  q.canonicalize();
  s.value_ = q;
  return s;
}

Scalar Scalar::from_mpq(const mpq_class& q) {
  Scalar s(Field::rationals());
  mpq_class c = q;
  c.canonicalize();
  s.value_ = c;
  return s;
}

Scalar Scalar::residue(long v, std::uint32_t p) {
  Field f = Field::prime(p);
  return integer(v, f);
}

Scalar Scalar::parse(const std::string& s, Field f) {
  std::string t = s;
  // tolerate a "<v> mod <p>" suffix matching the field
  auto mod_pos = t.find(" mod ");
  if (mod_pos != std::string::npos) {
    if (f.is_rational()) throw ParseError("residue literal '" + s + "' in a rational context");
    if (t.substr(mod_pos + 5) != std::to_string(f.p))
      throw ParseError("residue literal '" + s + "' does not match field " + f.str());
    t = t.substr(0, mod_pos);
  }
  try {
    mpq_class q(t);
    q.canonicalize();
    if (f.is_rational()) return from_mpq(q);
    // reduce num/den mod p
    mpz_class num = q.get_num(), den = q.get_den();
    mpz_class pz(static_cast<unsigned long>(f.p));
    mpz_class nr = num % pz; if (nr < 0) nr += pz;
    mpz_class dr = den % pz;
    if (dr == 0) throw DomainError("denominator of '" + s + "' vanishes mod " + std::to_string(f.p));
    Scalar a = integer(nr.get_si(), f);
    Scalar b = integer(dr.get_si(), f);
    return a / b;
  } catch (const std::invalid_argument&) {
    throw ParseError("bad scalar literal '" + s + "'");
  }
}

bool Scalar::is_zero() const {
  if (field_.is_rational()) return std::get<mpq_class>(value_) == 0;
  return std::get<Fp>(value_).v == 0;
}

bool Scalar::is_one() const {
  if (field_.is_rational()) return std::get<mpq_class>(value_) == 1;
  return std::get<Fp>(value_).v == 1;
}

bool Scalar::is_integer() const {
  if (field_.is_rational()) return std::get<mpq_class>(value_).get_den() == 1;
  return true;
}

const mpq_class& Scalar::rational_value() const {
  if (!field_.is_rational()) throw FieldMismatchError("rational_value on a mod-p scalar");
  return std::get<mpq_class>(value_);
}

std::uint64_t Scalar::residue_value() const {
  if (field_.is_rational()) throw FieldMismatchError("residue_value on a rational scalar");
  return std::get<Fp>(value_).v;
}

mpz_class Scalar::integer_value() const {
  if (field_.is_rational()) {
    const mpq_class& q = std::get<mpq_class>(value_);
    if (q.get_den() != 1) throw DomainError("scalar " + str() + " is not an integer");
    return q.get_num();
  }
  return mpz_class(static_cast<unsigned long>(std::get<Fp>(value_).v));
}

std::uint64_t Scalar::reduce(long v, std::uint32_t p) {
  long r = v % static_cast<long>(p);
  if (r < 0) r += static_cast<long>(p);
  return static_cast<std::uint64_t>(r);
}

void Scalar::check_same_field(const Scalar& o) const {
  if (field_ != o.field_)
    throw FieldMismatchError("mixed fields " + field_.str() + " and " + o.field_.str());
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (field_.is_rational()) {
    std::get<mpq_class>(r.value_) = -std::get<mpq_class>(r.value_);
  } else {
    std::uint64_t v = std::get<Fp>(r.value_).v;
    std::get<Fp>(r.value_).v = v == 0 ? 0 : field_.p - v;
  }
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same_field(o);
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) += std::get<mpq_class>(o.value_);
  } else {
    std::uint64_t v = std::get<Fp>(value_).v + std::get<Fp>(o.value_).v;
    if (v >= field_.p) v -= field_.p;
    std::get<Fp>(value_).v = v;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same_field(o);
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(o.value_);
  } else {
    std::uint64_t a = std::get<Fp>(value_).v, b = std::get<Fp>(o.value_).v;
    std::get<Fp>(value_).v = a >= b ? a - b : a + field_.p - b;
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same_field(o);
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(o.value_);
  } else {
    std::get<Fp>(value_).v = std::get<Fp>(value_).v * std::get<Fp>(o.value_).v % field_.p;
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_same_field(o);
  if (o.is_zero()) throw DomainError("division by zero");
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) /= std::get<mpq_class>(o.value_);
  } else {
    std::get<Fp>(value_).v =
        std::get<Fp>(value_).v * mod_inverse(std::get<Fp>(o.value_).v, field_.p) % field_.p;
  }
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  return one(field_) / *this;
}

Scalar Scalar::pow(std::uint64_t e) const {
  Scalar r = one(field_), b = *this;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

bool operator==(const Scalar& a, const Scalar& b) {
  return a.field_ == b.field_ && a.value_ == b.value_;
}

std::string Scalar::str() const {
  if (field_.is_rational()) return std::get<mpq_class>(value_).get_str();
  return std::to_string(std::get<Fp>(value_).v) + " mod " + std::to_string(field_.p);
}

}  // namespace lsc
