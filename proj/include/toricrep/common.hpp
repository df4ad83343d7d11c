#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace toricrep {

// Exponent pair (a,b) for s^a t^b; also a lattice point in the plane.
using Point2 = std::array<std::int64_t, 2>;

// Exponent tuple for T1..T4.
using Exp4 = std::array<std::int64_t, 4>;

inline Point2 operator+(Point2 a, Point2 b) { return {a[0] + b[0], a[1] + b[1]}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a[0] - b[0], a[1] - b[1]}; }
inline Point2 operator*(std::int64_t k, Point2 a) { return {k * a[0], k * a[1]}; }

// Raised on malformed textual input; `position` is a 0-based offset into the text.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t position)
      : std::runtime_error(msg + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Bad user input other than syntax: schema violations, missing files, bad flags.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The method itself failed on mathematically unsuitable input (degenerate
// geometry, Euler characteristic never vanishing, constant gcd, ...).
class MathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace toricrep
