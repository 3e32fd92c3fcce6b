#include "ncalg/field.hpp"

#include "ncalg/error.hpp"

namespace ncalg {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p)) {
    throw DomainError("characteristic " + std::to_string(p) + " is not prime");
  }
  return Field(p);
}

std::int64_t Field::reduce(std::int64_t n) const {
  const auto p = static_cast<std::int64_t>(p_);
  n %= p;
  return n < 0 ? n + p : n;
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(std::int64_t n) const {
  if (p_ != 0) return Scalar(reduce(n));
  return Scalar(mpq_class(static_cast<long>(n)));
}

Scalar Field::from_mpz(const mpz_class& n) const {
  if (p_ != 0) {
    mpz_class r = n % p_;
    if (r < 0) r += p_;
    return Scalar(static_cast<std::int64_t>(r.get_si()));
  }
  return Scalar(mpq_class(n));
}

bool Field::is_zero(const Scalar& x) const {
  return p_ != 0 ? x.residue() == 0 : sgn(x.rational()) == 0;
}

bool Field::is_one(const Scalar& x) const {
  return p_ != 0 ? x.residue() == 1 : x.rational() == 1;
}

Scalar Field::add(const Scalar& x, const Scalar& y) const {
  if (p_ != 0) return Scalar(reduce(x.residue() + y.residue()));
  return Scalar(mpq_class(x.rational() + y.rational()));
}

Scalar Field::sub(const Scalar& x, const Scalar& y) const {
  if (p_ != 0) return Scalar(reduce(x.residue() - y.residue()));
  return Scalar(mpq_class(x.rational() - y.rational()));
}

Scalar Field::mul(const Scalar& x, const Scalar& y) const {
  if (p_ != 0) return Scalar(reduce(x.residue() * y.residue()));
  return Scalar(mpq_class(x.rational() * y.rational()));
}

Scalar Field::neg(const Scalar& x) const {
  if (p_ != 0) return Scalar(reduce(-x.residue()));
  return Scalar(mpq_class(-x.rational()));
}

Scalar Field::inv(const Scalar& x) const {
  if (is_zero(x)) throw DomainError("division by zero");
  if (p_ == 0) return Scalar(mpq_class(1 / x.rational()));
  // Fermat: x^(p-2).
  std::int64_t result = 1;
  std::int64_t base = x.residue();
  for (std::uint64_t e = p_ - 2; e != 0; e >>= 1) {
    if (e & 1U) result = reduce(result * base);
    base = reduce(base * base);
  }
  return Scalar(result);
}

Scalar Field::binomial(std::uint64_t n, std::uint64_t k) const {
  if (k > n) return zero();
  if (p_ != 0) return Scalar(static_cast<std::int64_t>(lucas_binomial(k, n - k, p_)));
  return Scalar(mpq_class(exact_binomial(n, k)));
}

bool Field::is_negative(const Scalar& x) const {
  if (p_ == 0) return sgn(x.rational()) < 0;
  return 2 * x.residue() > static_cast<std::int64_t>(p_);
}

std::string Field::to_string(const Scalar& x) const {
  if (p_ == 0) return x.rational().get_str();
  std::int64_t r = x.residue();
  if (2 * r > static_cast<std::int64_t>(p_)) r -= p_;
  return std::to_string(r);
}

std::uint32_t lucas_binomial(std::uint64_t k, std::uint64_t l, std::uint32_t p) {
  std::uint64_t n = k + l;
  std::uint64_t result = 1;
  while (n != 0 || k != 0) {
    const std::uint64_t nd = n % p;
    const std::uint64_t kd = k % p;
    if (kd > nd) return 0;
    // C(nd, kd) mod p with nd < p: the denominator kd! is a unit.
    std::uint64_t num = 1;
    std::uint64_t den = 1;
    for (std::uint64_t i = 0; i < kd; ++i) {
      num = num * ((nd - i) % p) % p;
      den = den * ((i + 1) % p) % p;
    }
    std::uint64_t den_inv = 1;
    for (std::uint64_t e = p - 2, b = den; e != 0; e >>= 1) {
      if (e & 1U) den_inv = den_inv * b % p;
      b = b * b % p;
    }
    result = result * (num * den_inv % p) % p;
    n /= p;
    k /= p;
  }
  return static_cast<std::uint32_t>(result);
}

mpz_class exact_binomial(std::uint64_t n, std::uint64_t k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace ncalg
