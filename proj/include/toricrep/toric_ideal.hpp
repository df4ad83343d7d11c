#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "toricrep/polytope.hpp"

namespace toricrep {

// Pure-difference binomial x^lead - x^trail over the configuration variables
// (one variable per lattice point of Q, in lex point order). For toric
// relations the two exponent vectors have disjoint support and equal images.
struct Binomial {
  std::vector<std::int64_t> lead, trail;

  bool operator==(const Binomial& o) const {
    return lead == o.lead && trail == o.trail;
  }
};

// Reduced Groebner basis (grevlex on the configuration variables) of the
// graded lattice ideal of Q's lattice points, via the elimination
// construction: adjoin the parameters, a homogenizing variable and the
// inverted-product variable, run binomial Buchberger under a block
// elimination order, and keep the subring part.
std::vector<Binomial> toric_generators(const LatticePolytope& q,
                                       std::size_t point_cap = 24);

// Reduced Groebner basis (grevlex) of an arbitrary list of binomials over
// n_vars configuration variables.
std::vector<Binomial> binomial_groebner(const std::vector<Binomial>& gens,
                                        std::size_t n_vars);

// Normal form of b against a grevlex Groebner basis reduces to zero?
bool is_in_ideal(const Binomial& b, const std::vector<Binomial>& groebner_basis);

// "X2^2-X1*X3" style, variables indexed as in the lex point order of Q.
std::string binomial_str(const Binomial& b);

}  // namespace toricrep
