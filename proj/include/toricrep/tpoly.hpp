#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>

#include "toricrep/common.hpp"
#include "toricrep/param_poly.hpp"
#include "toricrep/rational.hpp"

namespace toricrep {

// Sparse polynomial in T1..T4, lexicographic exponent order, no zero terms.
class TPoly {
 public:
  using TermMap = std::map<Exp4, Rational>;

  TPoly() = default;
  explicit TPoly(TermMap terms);

  static TPoly monomial(Exp4 exp, const Rational& c);
  static TPoly variable(int i);  // i in 0..3

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational coeff(Exp4 exp) const;

  std::int64_t total_degree() const;  // -1 for the zero polynomial
  // Degree if every term has the same total degree, else nullopt.
  std::optional<std::int64_t> homogeneous_degree() const;

  TPoly operator-() const;
  TPoly operator+(const TPoly& o) const;
  TPoly operator-(const TPoly& o) const;
  TPoly operator*(const TPoly& o) const;
  TPoly operator*(const Rational& c) const;
  bool operator==(const TPoly& o) const { return terms_ == o.terms_; }

  Rational eval(const std::array<Rational, 4>& p) const;

  // Exact quotient if divisor divides this exactly, else nullopt.
  std::optional<TPoly> divided_by(const TPoly& divisor) const;

  // Integer-primitive, positive coefficient on the lex-largest monomial.
  // The zero polynomial normalizes to itself.
  TPoly normalized_primitive() const;

  std::string str() const;

 private:
  TermMap terms_;
};

// F(f1(s,t), ..., f4(s,t)) expanded exactly. Requires F homogeneous.
ParamPoly substitute_params(const TPoly& F, const std::array<ParamPoly, 4>& f);

}  // namespace toricrep
