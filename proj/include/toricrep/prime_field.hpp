#pragma once

#include <cstdint>
#include <stdexcept>

#include "toricrep/rational.hpp"

namespace toricrep {

// Raised when a rational cannot be reduced mod p (denominator divisible by p).
class ModularUnluckyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Element of Z/p for a session-wide 31-bit prime p. The modulus is
// thread-local so concurrent workers can use distinct primes; within one
// thread it is fixed per context (set it before building matrices).
class PrimeScalar {
 public:
  PrimeScalar() : r_(0) {}
  explicit PrimeScalar(std::uint64_t v) : r_(v % modulus()) {}

  static void set_modulus(std::uint64_t p) {
    if (p < 3) throw std::invalid_argument("modulus must be an odd prime");
    modulus_ = p;
  }
  static std::uint64_t modulus() {
    if (modulus_ == 0) throw std::logic_error("prime modulus not set");
    return modulus_;
  }

  std::uint64_t residue() const { return r_; }

  static PrimeScalar from_int(std::int64_t v) {
    const std::int64_t p = static_cast<std::int64_t>(modulus());
    std::int64_t r = v % p;
    if (r < 0) r += p;
    return raw(static_cast<std::uint64_t>(r));
  }

  static PrimeScalar from_rational(const Rational& q) {
    const std::uint64_t p = modulus();
    const std::uint64_t den = mpz_fdiv_ui(q.get_den().get_mpz_t(), p);
    if (den == 0)
      throw ModularUnluckyError("denominator vanishes mod " + std::to_string(p));
    const std::uint64_t num = mpz_fdiv_ui(q.get_num().get_mpz_t(), p);
    return raw(num) / raw(den);
  }

  friend PrimeScalar operator+(PrimeScalar a, PrimeScalar b) {
    std::uint64_t s = a.r_ + b.r_;
    if (s >= modulus()) s -= modulus();
    return raw(s);
  }
  friend PrimeScalar operator-(PrimeScalar a, PrimeScalar b) {
    std::uint64_t s = a.r_ + modulus() - b.r_;
    if (s >= modulus()) s -= modulus();
    return raw(s);
  }
  friend PrimeScalar operator*(PrimeScalar a, PrimeScalar b) {
    return raw((a.r_ * b.r_) % modulus());  // p < 2^31, no overflow
  }
  friend PrimeScalar operator/(PrimeScalar a, PrimeScalar b) { return a * b.inverse(); }
  PrimeScalar operator-() const { return r_ == 0 ? *this : raw(modulus() - r_); }

  PrimeScalar& operator+=(PrimeScalar b) { return *this = *this + b; }
  PrimeScalar& operator-=(PrimeScalar b) { return *this = *this - b; }
  PrimeScalar& operator*=(PrimeScalar b) { return *this = *this * b; }
  PrimeScalar& operator/=(PrimeScalar b) { return *this = *this / b; }

  friend bool operator==(PrimeScalar a, PrimeScalar b) { return a.r_ == b.r_; }
  friend bool operator!=(PrimeScalar a, PrimeScalar b) { return a.r_ != b.r_; }

  PrimeScalar inverse() const {
    if (r_ == 0) throw std::domain_error("inverse of zero in prime field");
    // extended Euclid
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(modulus());
    std::int64_t new_r = static_cast<std::int64_t>(r_);
    while (new_r != 0) {
      const std::int64_t q = r / new_r;
      t -= q * new_t;
      std::swap(t, new_t);
      r -= q * new_r;
      std::swap(r, new_r);
    }
    if (t < 0) t += static_cast<std::int64_t>(modulus());
    return raw(static_cast<std::uint64_t>(t));
  }

 private:
  static PrimeScalar raw(std::uint64_t r) {
    PrimeScalar x;
    x.r_ = r;
    return x;
  }
  std::uint64_t r_;
  static thread_local std::uint64_t modulus_;
};

}  // namespace toricrep
