#pragma once

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "toricrep/linalg.hpp"
#include "toricrep/toric.hpp"

namespace toricrep {

// One row of the degree search: cycle dimensions and Euler characteristic.
struct NuRow {
  std::int64_t nu = 0;
  Index dim_a = 0, z1 = 0, z2 = 0, z3 = 0;
  std::int64_t chi = 0;
};

struct NuReport {
  std::int64_t nu0 = 0;
  std::vector<NuRow> rows;
  std::string table_str() const;
};

// Graded strands of the Koszul cycle complex on the four reparametrized
// coordinates. Matrices are cached per (p, degree); fills are synchronized.
class ComplexContext {
 public:
  ComplexContext(ToricAlgebra algebra, std::array<GVector, 4> g);

  const ToricAlgebra& algebra() const { return alg_; }
  const std::array<GVector, 4>& g() const { return g_; }
  std::int64_t d() const { return d_; }

  // Cycle dimensions may be computed mod a prime instead of over Q;
  // callers opt in, results are then probabilistic lower bounds.
  void enable_prime_ranks(bool enabled) { prime_ranks_ = enabled; }
  bool prime_ranks() const { return prime_ranks_; }

  // Matrix of the p-th Koszul differential in internal degree mu:
  // (A_{mu-pd})^C(4,p) -> (A_{mu-(p-1)d})^C(4,p-1), p in 1..3.
  // The graded piece is empty (0 columns) when mu - p*d < 0.
  const QMatrix& koszul_matrix(int p, std::int64_t mu) const;

  // p = 0: dim A_mu; p in 1..3: nullity of the p-th differential at mu.
  Index cycle_dim(int p, std::int64_t mu) const;

 private:
  ToricAlgebra alg_;
  std::array<GVector, 4> g_;
  std::int64_t d_ = 1;
  bool prime_ranks_ = false;
  struct Cache;
  std::shared_ptr<Cache> cache_;
};

// Smallest nu >= 0 with chi(nu) = dim A_nu - z1(nu+d) + z2(nu+2d) - z3(nu+3d)
// equal to zero, plus the full search table. Throws MathError (with the
// table in the message) if the cap is exhausted.
NuReport find_nu0(const ComplexContext& ctx, std::int64_t cap);

// z1(nu0+d) - 2 z2(nu0+2d) + 3 z3(nu0+3d): the expected degree of the gcd of
// the maximal minors of the representation matrix built in degree nu0.
std::int64_t expected_degree(const ComplexContext& ctx, std::int64_t nu0);

}  // namespace toricrep
