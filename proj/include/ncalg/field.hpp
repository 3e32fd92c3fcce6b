#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <variant>

namespace ncalg {

/// A field element. Residues are used in characteristic p, exact rationals
/// in characteristic 0. Only meaningful together with the Field that made it.
class Scalar {
 public:
  Scalar() = default;
  explicit Scalar(std::int64_t residue) : value_(residue) {}
  explicit Scalar(mpq_class rational) : value_(std::move(rational)) {}

  bool is_residue() const { return std::holds_alternative<std::int64_t>(value_); }
  std::int64_t residue() const { return std::get<std::int64_t>(value_); }
  const mpq_class& rational() const { return std::get<mpq_class>(value_); }

  friend bool operator==(const Scalar& x, const Scalar& y) {
    return x.value_ == y.value_;
  }

 private:
  std::variant<std::int64_t, mpq_class> value_{std::int64_t{0}};
};

/// Characteristic 0 (the rationals) or a prime field F_p.
class Field {
 public:
  /// The rationals.
  Field() = default;

  static Field rationals() { return Field{}; }
  /// Throws DomainError unless p is prime.
  static Field prime(std::uint32_t p);

  std::uint32_t characteristic() const { return p_; }
  bool is_prime_field() const { return p_ != 0; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t n) const;
  Scalar from_mpz(const mpz_class& n) const;

  bool is_zero(const Scalar& x) const;
  bool is_one(const Scalar& x) const;

  Scalar add(const Scalar& x, const Scalar& y) const;
  Scalar sub(const Scalar& x, const Scalar& y) const;
  Scalar mul(const Scalar& x, const Scalar& y) const;
  Scalar neg(const Scalar& x) const;
  /// Throws DomainError on zero.
  Scalar inv(const Scalar& x) const;
  Scalar div(const Scalar& x, const Scalar& y) const { return mul(x, inv(y)); }

  /// C(n, k) in this field. Characteristic p uses Lucas' digit product,
  /// characteristic 0 the exact integer.
  Scalar binomial(std::uint64_t n, std::uint64_t k) const;

  /// Canonical text. Residues print as the representative of least absolute
  /// value, so -1 in F_3 prints as "-1", not "2".
  std::string to_string(const Scalar& x) const;
  /// Sign of the printed representative, used by the polynomial formatter.
  bool is_negative(const Scalar& x) const;

  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::int64_t reduce(std::int64_t n) const;

  std::uint32_t p_ = 0;
};

bool is_prime(std::uint64_t n);

/// C(k + l, k) mod p computed digit-wise in base p.
std::uint32_t lucas_binomial(std::uint64_t k, std::uint64_t l, std::uint32_t p);

/// Exact C(n, k).
mpz_class exact_binomial(std::uint64_t n, std::uint64_t k);

}  // namespace ncalg
