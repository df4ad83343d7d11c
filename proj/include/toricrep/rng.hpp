#pragma once

#include <cstdint>
#include <random>

#include "toricrep/rational.hpp"

namespace toricrep {

bool is_prime_u64(std::uint64_t n);

// All randomness in a run flows through one of these, so a fixed seed yields
// byte-identical results.
class SessionRng {
 public:
  explicit SessionRng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {  // inclusive
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(gen_);
  }

  bool coin() { return uniform(0, 1) == 1; }

  // Signed num/den with both magnitudes in [1, max].
  Rational rational(std::uint64_t max = 10000) {
    Rational q(Int(uniform(1, max)), Int(uniform(1, max)));
    q.canonicalize();
    return coin() ? Rational(-q) : q;
  }

  std::uint64_t prime_31bit() {
    for (;;) {
      std::uint64_t c = uniform(1u << 30, (1u << 31) - 1) | 1u;
      if (is_prime_u64(c)) return c;
    }
  }

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace toricrep
