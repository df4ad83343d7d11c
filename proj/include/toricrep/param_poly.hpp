#pragma once

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "toricrep/common.hpp"
#include "toricrep/rational.hpp"

namespace toricrep {

// Sparse polynomial in the parameters (s,t) with exact rational coefficients.
// Laurent exponents are tolerated so inputs can be normalized later; the
// pipeline shifts everything into the nonnegative quadrant up front.
// Terms are kept in lexicographic exponent order and never store a zero.
class ParamPoly {
 public:
  using TermMap = std::map<Point2, Rational>;

  ParamPoly() = default;
  explicit ParamPoly(TermMap terms);

  static ParamPoly zero() { return ParamPoly(); }
  static ParamPoly constant(const Rational& c);
  static ParamPoly monomial(Point2 exp, const Rational& c);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(Point2 exp) const;

  std::vector<Point2> support() const;
  // Componentwise minimum over the support; {0,0} for the zero polynomial.
  Point2 min_exponents() const;
  // Multiplies by s^shift[0] t^shift[1] (shift may be negative).
  ParamPoly shifted(Point2 shift) const;

  ParamPoly operator-() const;
  ParamPoly operator+(const ParamPoly& o) const;
  ParamPoly operator-(const ParamPoly& o) const;
  ParamPoly operator*(const ParamPoly& o) const;
  ParamPoly operator*(const Rational& c) const;
  bool operator==(const ParamPoly& o) const { return terms_ == o.terms_; }

  ParamPoly pow(std::int64_t e) const;

  std::string str() const;

 private:
  TermMap terms_;
};

// Grammar:  poly := term (('+'|'-') term)*
//           term := [coeff '*'] ['s' ['^' int]] ['*'] ['t' ['^' int]] | coeff
//           coeff := int | int '/' int
// Whitespace is ignored everywhere. Exponents may be negative (Laurent).
ParamPoly parse_param_poly(std::string_view text);

// Exact value at a rational point. A negative exponent on a zero coordinate
// is an evaluation error.
Rational eval_param_poly(const ParamPoly& f, const Rational& s, const Rational& t);

}  // namespace toricrep
