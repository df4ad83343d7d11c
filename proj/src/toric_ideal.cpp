#include "toricrep/toric_ideal.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

#include "toricrep/common.hpp"

namespace toricrep {

namespace {

using Mono = std::vector<std::int64_t>;

// Block order: total degree of the first `elim` variables first, then
// grevlex over all variables. With elim = 0 this is plain grevlex.
struct BlockOrder {
  std::size_t elim = 0;

  bool less(const Mono& a, const Mono& b) const {
    std::int64_t wa = 0, wb = 0;
    for (std::size_t i = 0; i < elim; ++i) {
      wa += a[i];
      wb += b[i];
    }
    if (wa != wb) return wa < wb;
    const std::int64_t da = std::accumulate(a.begin(), a.end(), std::int64_t{0});
    const std::int64_t db = std::accumulate(b.begin(), b.end(), std::int64_t{0});
    if (da != db) return da < db;
    for (std::size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] > b[i];
    return false;
  }
};

bool divides(const Mono& a, const Mono& b) {  // a | b
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Mono quotient(const Mono& b, const Mono& a) {  // b / a
  Mono q(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) q[i] = b[i] - a[i];
  return q;
}

Mono mono_mul(const Mono& a, const Mono& b) {
  Mono m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m[i] = a[i] + b[i];
  return m;
}

Mono mono_lcm(const Mono& a, const Mono& b) {
  Mono m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m[i] = std::max(a[i], b[i]);
  return m;
}

// x^lead - x^trail with lead > trail under the order; lead == trail is the
// zero binomial (flagged empty).
struct WB {
  Mono lead, trail;
  bool zero = false;
};

WB make_wb(Mono a, Mono b, const BlockOrder& ord) {
  WB f;
  if (a == b) {
    f.zero = true;
    return f;
  }
  if (ord.less(a, b)) std::swap(a, b);
  f.lead = std::move(a);
  f.trail = std::move(b);
  return f;
}

// Full normal form: reduce lead and trail until neither is divisible by any
// basis lead. Every reduction strictly decreases a term in a well-order.
WB normal_form(WB f, const std::vector<WB>& basis, const BlockOrder& ord) {
  if (f.zero) return f;
  for (;;) {
    bool reduced = false;
    for (const WB& g : basis) {
      if (divides(g.lead, f.lead)) {
        Mono repl = mono_mul(quotient(f.lead, g.lead), g.trail);
        f = make_wb(std::move(repl), std::move(f.trail), ord);
        reduced = true;
        break;
      }
    }
    if (f.zero) return f;
    if (reduced) continue;
    for (const WB& g : basis) {
      if (divides(g.lead, f.trail)) {
        Mono repl = mono_mul(quotient(f.trail, g.lead), g.trail);
        f = make_wb(std::move(f.lead), std::move(repl), ord);
        reduced = true;
        break;
      }
    }
    if (f.zero || !reduced) return f;
  }
}

// Buchberger restricted to pure-difference binomials: S-pairs and reductions
// of binomials stay binomial, so no general polynomial arithmetic appears.
std::vector<WB> buchberger(std::vector<WB> basis, const BlockOrder& ord,
                           std::size_t pair_cap = 200000) {
  std::erase_if(basis, [](const WB& f) { return f.zero; });
  std::deque<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);

  std::size_t processed = 0;
  while (!pairs.empty()) {
    if (++processed > pair_cap)
      throw MathError("binomial Buchberger exceeded its work cap");
    const auto [i, j] = pairs.front();
    pairs.pop_front();
    const WB& f = basis[i];
    const WB& g = basis[j];
    const Mono l = mono_lcm(f.lead, g.lead);
    if (l == mono_mul(f.lead, g.lead)) continue;  // coprime leads
    WB s = make_wb(mono_mul(quotient(l, f.lead), f.trail),
                   mono_mul(quotient(l, g.lead), g.trail), ord);
    s = normal_form(std::move(s), basis, ord);
    if (s.zero) continue;
    basis.push_back(std::move(s));
    for (std::size_t k = 0; k + 1 < basis.size(); ++k)
      pairs.emplace_back(k, basis.size() - 1);
  }

  // minimalize: drop elements whose lead is divisible by another lead
  std::vector<WB> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      if (divides(basis[j].lead, basis[i].lead))
        redundant = basis[j].lead != basis[i].lead || j < i;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  // tail-reduce for the unique reduced basis
  std::vector<WB> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<WB> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    WB nf = normal_form(minimal[i], others, ord);
    if (!nf.zero) reduced.push_back(std::move(nf));
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const WB& a, const WB& b) { return ord.less(a.lead, b.lead); });
  return reduced;
}

Binomial to_binomial(const WB& f, std::size_t skip_vars) {
  Binomial b;
  b.lead.assign(f.lead.begin() + static_cast<std::ptrdiff_t>(skip_vars), f.lead.end());
  b.trail.assign(f.trail.begin() + static_cast<std::ptrdiff_t>(skip_vars), f.trail.end());
  return b;
}

WB from_binomial(const Binomial& b, const BlockOrder& ord) {
  return make_wb(Mono(b.lead), Mono(b.trail), ord);
}

}  // namespace

std::vector<Binomial> toric_generators(const LatticePolytope& q, std::size_t point_cap) {
  if (q.degenerate()) throw MathError("toric ideal of a degenerate polytope");
  const PointList pts = lattice_points(q, 1);
  const std::size_t n = pts.size();
  if (n > point_cap)
    throw MathError("point configuration exceeds the cap of " +
                    std::to_string(point_cap) + " points");

  // work variables: s, t, h (homogenizer), w (inverse of the product), x_i
  constexpr std::size_t kElim = 4;
  const std::size_t nvars = kElim + n;
  const BlockOrder ord{kElim};

  std::vector<WB> gens;
  for (std::size_t i = 0; i < n; ++i) {
    // x_i - s^a t^b h
    Mono xi(nvars, 0), m(nvars, 0);
    xi[kElim + i] = 1;
    const Point2 p = pts[i];
    if (p[0] < 0 || p[1] < 0)
      throw InputError("configuration points must be normalized to >= 0");
    m[0] = p[0];
    m[1] = p[1];
    m[2] = 1;
    gens.push_back(make_wb(std::move(xi), std::move(m), ord));
  }
  {
    // 1 - w * prod(x_i)
    Mono one(nvars, 0), wprod(nvars, 0);
    wprod[3] = 1;
    for (std::size_t i = 0; i < n; ++i) wprod[kElim + i] = 1;
    gens.push_back(make_wb(std::move(wprod), std::move(one), ord));
  }

  const std::vector<WB> gb = buchberger(std::move(gens), ord);

  std::vector<Binomial> out;
  for (const WB& f : gb) {
    bool subring = true;
    for (std::size_t i = 0; i < kElim && subring; ++i)
      subring = f.lead[i] == 0 && f.trail[i] == 0;
    if (!subring) continue;
    Binomial b = to_binomial(f, kElim);
    // engine sanity: a genuine graded lattice relation
    std::int64_t sx = 0, sy = 0, dg = 0;
    for (std::size_t i = 0; i < n; ++i) {
      sx += (b.lead[i] - b.trail[i]) * pts[i][0];
      sy += (b.lead[i] - b.trail[i]) * pts[i][1];
      dg += b.lead[i] - b.trail[i];
      if (b.lead[i] != 0 && b.trail[i] != 0)
        throw std::logic_error("toric basis element without disjoint support");
    }
    if (sx != 0 || sy != 0 || dg != 0)
      throw std::logic_error("toric basis element is not a lattice relation");
    out.push_back(std::move(b));
  }
  return out;
}

std::vector<Binomial> binomial_groebner(const std::vector<Binomial>& gens,
                                        std::size_t n_vars) {
  const BlockOrder ord{0};
  std::vector<WB> work;
  for (const Binomial& b : gens) {
    if (b.lead.size() != n_vars || b.trail.size() != n_vars)
      throw InputError("binomial arity mismatch");
    work.push_back(from_binomial(b, ord));
  }
  std::vector<Binomial> out;
  for (const WB& f : buchberger(std::move(work), ord)) out.push_back(to_binomial(f, 0));
  return out;
}

bool is_in_ideal(const Binomial& b, const std::vector<Binomial>& groebner_basis) {
  const BlockOrder ord{0};
  std::vector<WB> basis;
  for (const Binomial& g : groebner_basis) {
    WB f = from_binomial(g, ord);
    if (!f.zero) basis.push_back(std::move(f));
  }
  WB f = from_binomial(b, ord);
  return normal_form(std::move(f), basis, ord).zero;
}

std::string binomial_str(const Binomial& b) {
  auto side = [](const std::vector<std::int64_t>& exps) {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] == 0) continue;
      if (!first) out << "*";
      first = false;
      out << "X" << i;
      if (exps[i] != 1) out << "^" << exps[i];
    }
    if (first) out << "1";
    return out.str();
  };
  return side(b.lead) + "-" + side(b.trail);
}

}  // namespace toricrep
