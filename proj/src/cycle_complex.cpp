#include "toricrep/cycle_complex.hpp"

#include <mutex>
#include <sstream>

namespace toricrep {

namespace {

// size-p subsets of {0,1,2,3} in lexicographic order
const std::vector<std::vector<int>>& subsets(int p) {
  static const std::array<std::vector<std::vector<int>>, 4> all = {{
      {{}},
      {{0}, {1}, {2}, {3}},
      {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}},
      {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}},
  }};
  return all[static_cast<std::size_t>(p)];
}

int subset_index(int p, const std::vector<int>& s) {
  const auto& list = subsets(p);
  for (std::size_t i = 0; i < list.size(); ++i)
    if (list[i] == s) return static_cast<int>(i);
  throw std::logic_error("subset not found");
}

}  // namespace

struct ComplexContext::Cache {
  std::mutex mu;
  std::map<std::pair<int, std::int64_t>, QMatrix> matrices;
  std::map<std::pair<int, std::int64_t>, Index> dims;
};

ComplexContext::ComplexContext(ToricAlgebra algebra, std::array<GVector, 4> g)
    : alg_(std::move(algebra)), g_(std::move(g)), cache_(std::make_shared<Cache>()) {
  d_ = g_[0].degree();
  for (const GVector& gi : g_)
    if (gi.degree() != d_)
      throw InputError("coordinates must share a common degree");
  if (g_[0].is_zero() && g_[1].is_zero() && g_[2].is_zero() && g_[3].is_zero())
    throw MathError("all four coordinates are zero");
  if (d_ < 1) throw InputError("coordinate degree must be >= 1");
}

const QMatrix& ComplexContext::koszul_matrix(int p, std::int64_t mu) const {
  if (p < 1 || p > 3) throw InputError("Koszul differential index must be in 1..3");
  std::lock_guard<std::mutex> lock(cache_->mu);
  auto key = std::make_pair(p, mu);
  auto it = cache_->matrices.find(key);
  if (it != cache_->matrices.end()) return it->second;

  const std::int64_t src_deg = mu - p * d_;
  const std::int64_t tgt_deg = mu - (p - 1) * d_;
  const Index src_dim = alg_.dim(src_deg);
  const Index tgt_dim = alg_.dim(tgt_deg);
  const auto& src_sets = subsets(p);
  const auto& tgt_sets = subsets(p - 1);

  QMatrix m = QMatrix::Zero(tgt_dim * static_cast<Index>(tgt_sets.size()),
                            src_dim * static_cast<Index>(src_sets.size()));
  if (src_dim > 0) {
    // kappa_p(e_I (x) a) = sum_j (-1)^(j) g_{I[j]} a (x) e_{I minus I[j]}
    for (std::size_t si = 0; si < src_sets.size(); ++si) {
      const auto& I = src_sets[si];
      for (std::size_t j = 0; j < I.size(); ++j) {
        std::vector<int> J;
        for (std::size_t k = 0; k < I.size(); ++k)
          if (k != j) J.push_back(I[k]);
        const int ti = subset_index(p - 1, J);
        const QMatrix block = mult_matrix(g_[static_cast<std::size_t>(I[j])], src_deg, alg_);
        const Rational sign = (j % 2 == 0) ? Rational(1) : Rational(-1);
        m.block(ti * tgt_dim, static_cast<Index>(si) * src_dim, tgt_dim, src_dim) +=
            sign * block;
      }
    }
  }
  return cache_->matrices.emplace(key, std::move(m)).first->second;
}

Index ComplexContext::cycle_dim(int p, std::int64_t mu) const {
  if (p == 0) return alg_.dim(mu);
  if (p < 0 || p > 3) throw InputError("cycle index must be in 0..3");
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->dims.find({p, mu});
    if (it != cache_->dims.end()) return it->second;
  }
  Index nullity = 0;
  if (mu - p * d_ >= 0) {
    const QMatrix& m = koszul_matrix(p, mu);
    const Index r = prime_ranks_ ? rank_mod_p(m) : rank(m);
    nullity = m.cols() - r;
  }
  std::lock_guard<std::mutex> lock(cache_->mu);
  return cache_->dims.emplace(std::make_pair(p, mu), nullity).first->second;
}

std::string NuReport::table_str() const {
  std::ostringstream out;
  out << "nu  dim A_nu  z1(nu+d)  z2(nu+2d)  z3(nu+3d)  chi\n";
  for (const NuRow& r : rows) {
    out << r.nu << "   " << r.dim_a << "   " << r.z1 << "   " << r.z2 << "   "
        << r.z3 << "   " << r.chi << "\n";
  }
  return out.str();
}

NuReport find_nu0(const ComplexContext& ctx, std::int64_t cap) {
  if (cap < 1) throw InputError("search cap must be >= 1");
  const std::int64_t d = ctx.d();
  NuReport report;
  for (std::int64_t nu = 0; nu <= cap; ++nu) {
    NuRow row;
    row.nu = nu;
    row.dim_a = ctx.cycle_dim(0, nu);
    row.z1 = ctx.cycle_dim(1, nu + d);
    row.z2 = ctx.cycle_dim(2, nu + 2 * d);
    row.z3 = ctx.cycle_dim(3, nu + 3 * d);
    row.chi = row.dim_a - row.z1 + row.z2 - row.z3;
    report.rows.push_back(row);
    if (row.chi == 0) {
      report.nu0 = nu;
      return report;
    }
  }
  throw MathError("Euler characteristic never vanished up to nu = " +
                  std::to_string(cap) + "\n" + report.table_str());
}

std::int64_t expected_degree(const ComplexContext& ctx, std::int64_t nu0) {
  const std::int64_t d = ctx.d();
  const Index dim_a = ctx.cycle_dim(0, nu0);
  const Index z1 = ctx.cycle_dim(1, nu0 + d);
  const Index z2 = ctx.cycle_dim(2, nu0 + 2 * d);
  const Index z3 = ctx.cycle_dim(3, nu0 + 3 * d);
  if (dim_a - z1 + z2 - z3 != 0)
    throw InputError("expected degree requires chi(nu0) = 0");
  return z1 - 2 * z2 + 3 * z3;
}

}  // namespace toricrep
