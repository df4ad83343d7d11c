#include "toricrep/implicitize.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "toricrep/linalg.hpp"
#include "toricrep/rng.hpp"

namespace toricrep {

namespace {

// ---------- dense univariate polynomials over Q (little-endian) ----------

using QPoly = std::vector<Rational>;

void poly_trim(QPoly& p) {
  while (!p.empty() && is_zero(p.back())) p.pop_back();
}

std::int64_t poly_deg(const QPoly& p) { return static_cast<std::int64_t>(p.size()) - 1; }

Rational poly_eval(const QPoly& p, const Rational& x) {
  Rational acc(0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

QPoly poly_mod(QPoly a, const QPoly& b) {
  poly_trim(a);
  while (poly_deg(a) >= poly_deg(b)) {
    const Rational q = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
    a.pop_back();
    poly_trim(a);
  }
  return a;
}

QPoly poly_gcd_monic(QPoly a, QPoly b) {
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    QPoly r = poly_mod(std::move(a), b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Rational lead = a.back();
    for (Rational& c : a) c /= lead;
  }
  return a;
}

QPoly poly_gcd_list(const std::vector<const QPoly*>& ps) {
  QPoly g;
  for (const QPoly* p : ps) g = g.empty() ? *p : poly_gcd_monic(std::move(g), *p);
  poly_trim(g);
  return g;
}

// Newton interpolation at integer nodes 0..n (in place divided differences,
// then expansion to the monomial basis).
QPoly newton_interpolate(std::vector<Rational> v) {
  const std::size_t n = v.size();
  for (std::size_t lvl = 1; lvl < n; ++lvl)
    for (std::size_t idx = n - 1; idx >= lvl; --idx)
      v[idx] = (v[idx] - v[idx - 1]) / Rational(static_cast<long>(lvl));
  // Horner over the Newton form: p = dd_k + (x - x_k) * p_next
  QPoly p = {v[n - 1]};
  for (std::size_t k = n - 1; k-- > 0;) {
    QPoly next(p.size() + 1, Rational(0));
    const Rational node(static_cast<long>(k));
    for (std::size_t i = 0; i < p.size(); ++i) {
      next[i + 1] += p[i];
      next[i] -= node * p[i];
    }
    next[0] += v[k];
    p = std::move(next);
  }
  poly_trim(p);
  return p;
}

// ---------- trivariate interpolation on the simplex grid ----------

// values v[i][j][k] at nodes (i,j,k), i+j+k <= n; returns the coefficient map
// of the unique polynomial of total degree <= n matching them.
std::map<std::array<std::int64_t, 3>, Rational> simplex_interpolate(
    std::vector<std::vector<std::vector<Rational>>> v, std::int64_t n) {
  auto dd = [](std::vector<Rational>& a) {
    const std::size_t len = a.size();
    for (std::size_t lvl = 1; lvl < len; ++lvl)
      for (std::size_t idx = len - 1; idx >= lvl; --idx)
        a[idx] = (a[idx] - a[idx - 1]) / Rational(static_cast<long>(lvl));
  };

  // divided differences along k, then j, then i
  for (auto& plane : v)
    for (auto& line : plane) dd(line);
  for (std::int64_t i = 0; i <= n; ++i)
    for (std::int64_t k = 0; k + i <= n; ++k) {
      std::vector<Rational> line;
      for (std::int64_t j = 0; i + j + k <= n; ++j) line.push_back(v[i][j][k]);
      dd(line);
      for (std::int64_t j = 0; i + j + k <= n; ++j) v[i][j][k] = line[j];
    }
  for (std::int64_t j = 0; j <= n; ++j)
    for (std::int64_t k = 0; j + k <= n; ++k) {
      std::vector<Rational> line;
      for (std::int64_t i = 0; i + j + k <= n; ++i) line.push_back(v[i][j][k]);
      dd(line);
      for (std::int64_t i = 0; i + j + k <= n; ++i) v[i][j][k] = line[i];
    }

  // Newton basis polynomials N_m(x) = prod_{a<m} (x - a)
  std::vector<QPoly> basis(static_cast<std::size_t>(n) + 1);
  basis[0] = {Rational(1)};
  for (std::int64_t m = 1; m <= n; ++m) {
    const QPoly& prev = basis[m - 1];
    QPoly cur(prev.size() + 1, Rational(0));
    const Rational node(static_cast<long>(m - 1));
    for (std::size_t i = 0; i < prev.size(); ++i) {
      cur[i + 1] += prev[i];
      cur[i] -= node * prev[i];
    }
    basis[m] = std::move(cur);
  }

  std::map<std::array<std::int64_t, 3>, Rational> out;
  for (std::int64_t i = 0; i <= n; ++i)
    for (std::int64_t j = 0; i + j <= n; ++j)
      for (std::int64_t k = 0; i + j + k <= n; ++k) {
        const Rational& c = v[i][j][k];
        if (is_zero(c)) continue;
        for (std::int64_t a = 0; a <= i; ++a)
          for (std::int64_t b = 0; b <= j; ++b)
            for (std::int64_t cc = 0; cc <= k; ++cc) {
              const Rational term = c * basis[i][a] * basis[j][b] * basis[k][cc];
              if (is_zero(term)) continue;
              auto [it, fresh] = out.emplace(std::array<std::int64_t, 3>{a, b, cc}, term);
              if (!fresh) it->second += term;
            }
      }
  for (auto it = out.begin(); it != out.end();)
    it = is_zero(it->second) ? out.erase(it) : std::next(it);
  return out;
}

TPoly homogenize(const std::map<std::array<std::int64_t, 3>, Rational>& coeffs,
                 std::int64_t degree) {
  TPoly::TermMap terms;
  for (const auto& [e, c] : coeffs) {
    const std::int64_t e4 = degree - e[0] - e[1] - e[2];
    if (e4 < 0) throw std::logic_error("interpolated degree exceeds the target");
    terms[{e[0], e[1], e[2], e4}] = c;
  }
  return TPoly(std::move(terms));
}

// ---------- square subpencils ----------

struct SquarePencil {
  std::array<QMatrix, 4> s;
  Index n = 0;
};

SquarePencil subpencil(const RepMatrix& m, const std::vector<Index>& cols) {
  SquarePencil sp;
  sp.n = static_cast<Index>(cols.size());
  for (int i = 0; i < 4; ++i) {
    sp.s[i].resize(m.rows(), sp.n);
    for (Index j = 0; j < sp.n; ++j) sp.s[i].col(j) = m.coeff[i].col(cols[j]);
  }
  return sp;
}

Rational pencil_det(const SquarePencil& sp, const std::array<Rational, 4>& t) {
  QMatrix e = QMatrix::Zero(sp.n, sp.n);
  for (int i = 0; i < 4; ++i) {
    if (is_zero(t[i])) continue;
    e += t[i] * sp.s[i];
  }
  return det(e);
}

// det along the affine line u + t*v, interpolated from n+1 integer nodes and
// returned as a univariate polynomial of degree <= n.
QPoly line_restriction(const SquarePencil& sp, const std::array<Rational, 4>& u,
                       const std::array<Rational, 4>& v) {
  QMatrix a = QMatrix::Zero(sp.n, sp.n), b = QMatrix::Zero(sp.n, sp.n);
  for (int i = 0; i < 4; ++i) {
    if (!is_zero(u[i])) a += u[i] * sp.s[i];
    if (!is_zero(v[i])) b += v[i] * sp.s[i];
  }
  std::vector<Rational> values;
  QMatrix e = a;
  values.push_back(det(e));
  for (Index t = 1; t <= sp.n; ++t) {
    e += b;
    values.push_back(det(e));
  }
  return newton_interpolate(std::move(values));
}

std::array<Rational, 4> random_coords(SessionRng& rng) {
  return {rng.rational(), rng.rational(), rng.rational(), rng.rational()};
}

std::vector<Index> greedy_columns(const QMatrix& e, const std::vector<Index>& order,
                                  Index target) {
  std::vector<QVector> reduced;
  std::vector<Index> pivots, chosen;
  for (Index j : order) {
    QVector v = e.col(j);
    for (std::size_t k = 0; k < reduced.size(); ++k) {
      const Rational c = v(pivots[k]);
      if (!is_zero(c)) v -= c * reduced[k];
    }
    Index piv = -1;
    for (Index i = 0; i < v.size(); ++i)
      if (!is_zero(v(i))) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    v /= v(piv);
    reduced.push_back(std::move(v));
    pivots.push_back(piv);
    chosen.push_back(j);
    if (static_cast<Index>(chosen.size()) == target) break;
  }
  return chosen;
}

constexpr int kRetryBudget = 8;

std::vector<Index> select_with_order(const RepMatrix& m, SessionRng& rng,
                                     bool shuffle_columns) {
  std::vector<Index> order(static_cast<std::size_t>(m.cols()));
  for (Index j = 0; j < m.cols(); ++j) order[static_cast<std::size_t>(j)] = j;
  for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
    if (shuffle_columns) std::shuffle(order.begin(), order.end(), rng.engine());
    const P3Point p = P3Point::of(random_coords(rng));
    std::vector<Index> chosen = greedy_columns(evaluate(m, p), order, m.rows());
    if (static_cast<Index>(chosen.size()) == m.rows()) {
      std::sort(chosen.begin(), chosen.end());
      return chosen;
    }
  }
  throw MathError("no invertible maximal submatrix found: the pencil is rank "
                  "deficient at every sampled point");
}

// Distinct column selections beyond the first, via seeded column shuffles.
std::vector<std::vector<Index>> distinct_selections(const RepMatrix& m, SessionRng& rng,
                                                    const std::vector<Index>& first,
                                                    std::size_t want) {
  std::set<std::vector<Index>> seen = {first};
  std::vector<std::vector<Index>> out = {first};
  int misses = 0;
  while (out.size() < want && misses < 3 * kRetryBudget) {
    std::vector<Index> sel = select_with_order(m, rng, true);
    if (seen.insert(sel).second)
      out.push_back(std::move(sel));
    else
      ++misses;
  }
  return out;
}

}  // namespace

std::vector<Index> select_max_cols(const RepMatrix& m, std::uint64_t seed) {
  if (m.cols() < m.rows())
    throw MathError("pencil has fewer columns than rows; not of full row rank");
  SessionRng rng(seed);
  return select_with_order(m, rng, false);
}

TPoly minor_determinant(const RepMatrix& m, const std::vector<Index>& cols) {
  const Index r = m.rows();
  if (static_cast<Index>(cols.size()) != r)
    throw InputError("column selection size must equal the row count");
  if (r == 0) throw InputError("empty pencil");
  const SquarePencil sp = subpencil(m, cols);

  std::vector<std::vector<std::vector<Rational>>> values(static_cast<std::size_t>(r) + 1);
  for (std::int64_t i = 0; i <= r; ++i) {
    values[i].resize(static_cast<std::size_t>(r - i) + 1);
    for (std::int64_t j = 0; i + j <= r; ++j) {
      values[i][j].resize(static_cast<std::size_t>(r - i - j) + 1);
      for (std::int64_t k = 0; i + j + k <= r; ++k)
        values[i][j][k] = pencil_det(
            sp, {Rational(static_cast<long>(i)), Rational(static_cast<long>(j)),
                 Rational(static_cast<long>(k)), Rational(1)});
    }
  }
  return homogenize(simplex_interpolate(std::move(values), r), r);
}

std::array<ParamPoly, 4> recover_param_polys(const RepMatrix& m) {
  return {m.g[0].to_param_poly(), m.g[1].to_param_poly(), m.g[2].to_param_poly(),
          m.g[3].to_param_poly()};
}

bool verify_implicit(const TPoly& F, const std::array<ParamPoly, 4>& fs) {
  return substitute_params(F, fs).is_zero();
}

namespace {

struct GcdRound {
  TPoly f;
  std::int64_t gcd_degree = 0;
};

// One gcd recovery pass over the given pencils with a fixed base point u.
// Returns nullopt when a degenerate plane is hit and a fresh u is needed.
std::optional<GcdRound> gcd_of_pencils(const std::vector<const SquarePencil*>& pencils,
                                       const std::array<Rational, 4>& u,
                                       const std::vector<std::array<Rational, 4>>& est_dirs,
                                       std::map<std::array<std::int64_t, 3>,
                                                std::vector<QPoly>>& node_cache,
                                       std::vector<std::vector<QPoly>>& est_cache) {
  // estimated gcd degree: minimum over the estimation planes
  std::int64_t m = -1;
  for (std::size_t e = 0; e < est_dirs.size(); ++e) {
    auto& polys = est_cache[e];
    while (polys.size() < pencils.size())
      polys.push_back(line_restriction(*pencils[polys.size()], u, est_dirs[e]));
    std::vector<const QPoly*> ptrs;
    for (std::size_t i = 0; i < pencils.size(); ++i) ptrs.push_back(&polys[i]);
    const std::int64_t deg = poly_deg(poly_gcd_list(ptrs));
    m = (m < 0) ? deg : std::min(m, deg);
  }
  if (m < 0) return std::nullopt;
  if (m == 0)
    throw MathError("gcd of the maximal minors is constant: the pencil does not "
                    "represent a surface");

  // node values F(w)/F(u) on the degree-m simplex grid
  std::vector<std::vector<std::vector<Rational>>> values(static_cast<std::size_t>(m) + 1);
  for (std::int64_t a = 0; a <= m; ++a) {
    values[a].resize(static_cast<std::size_t>(m - a) + 1);
    for (std::int64_t b = 0; a + b <= m; ++b) {
      values[a][b].resize(static_cast<std::size_t>(m - a - b) + 1);
      for (std::int64_t c = 0; a + b + c <= m; ++c) {
        const std::array<std::int64_t, 3> node = {a, b, c};
        auto& restr = node_cache[node];
        const std::array<Rational, 4> w = {Rational(static_cast<long>(a)),
                                           Rational(static_cast<long>(b)),
                                           Rational(static_cast<long>(c)), Rational(1)};
        std::array<Rational, 4> dir;
        for (int i = 0; i < 4; ++i) dir[i] = w[i] - u[i];
        while (restr.size() < pencils.size())
          restr.push_back(line_restriction(*pencils[restr.size()], u, dir));
        std::vector<const QPoly*> ptrs;
        for (std::size_t i = 0; i < pencils.size(); ++i) ptrs.push_back(&restr[i]);
        const QPoly g = poly_gcd_list(ptrs);
        if (poly_deg(g) != m) return std::nullopt;  // special plane through this node
        const Rational g0 = poly_eval(g, Rational(0));
        if (is_zero(g0)) return std::nullopt;  // u lies on the gcd locus
        values[a][b][c] = poly_eval(g, Rational(1)) / g0;
      }
    }
  }

  GcdRound round;
  round.gcd_degree = m;
  round.f = homogenize(simplex_interpolate(std::move(values), m), m).normalized_primitive();
  return round;
}

}  // namespace

ImplicitResult implicit_equation(const RepMatrix& m, std::uint64_t seed) {
  const Index r = m.rows();
  if (m.cols() < r)
    throw MathError("pencil has fewer columns than rows; not of full row rank");

  const std::vector<Index> first = select_max_cols(m, seed);
  SessionRng rng(seed + 0x9e3779b97f4a7c15ULL);

  const std::size_t kMaxMinors = 6;
  std::vector<std::vector<Index>> selections = distinct_selections(m, rng, first, kMaxMinors);
  std::vector<SquarePencil> pencils;
  pencils.reserve(selections.size());
  for (const auto& sel : selections) pencils.push_back(subpencil(m, sel));

  const TPoly d_full = minor_determinant(m, first);
  if (d_full.is_zero()) throw MathError("selected maximal minor is identically zero");

  ImplicitResult res;
  res.D = d_full;

  TPoly f;
  if (pencils.size() < 2) {
    // no second independent minor exists; the lone minor is the gcd
    f = d_full.normalized_primitive();
  } else {
    bool done = false;
    for (int attempt = 0; attempt < kRetryBudget && !done; ++attempt) {
      const std::array<Rational, 4> u = random_coords(rng);
      std::vector<std::array<Rational, 4>> est_dirs = {random_coords(rng),
                                                       random_coords(rng)};
      bool u_ok = true;
      for (const SquarePencil& sp : pencils)
        if (is_zero(pencil_det(sp, u))) {
          u_ok = false;
          break;
        }
      if (!u_ok) continue;

      std::map<std::array<std::int64_t, 3>, std::vector<QPoly>> node_cache;
      std::vector<std::vector<QPoly>> est_cache(est_dirs.size());

      std::optional<GcdRound> prev;
      std::vector<const SquarePencil*> active = {&pencils[0], &pencils[1]};
      for (std::size_t k = 2; k <= pencils.size(); ++k) {
        auto round = gcd_of_pencils(active, u, est_dirs, node_cache, est_cache);
        if (!round) break;  // degenerate draw, fresh attempt
        if (prev && prev->f == round->f) {
          // stabilized across two rounds; confirm divisibility
          std::int64_t delta = 0;
          TPoly cur = d_full;
          while (auto q = cur.divided_by(round->f)) {
            ++delta;
            cur = *q;
            if (cur.is_constant()) break;
          }
          if (delta >= 1) {
            f = round->f;
            res.delta = delta;
            res.G = cur;
            done = true;
          }
          break;
        }
        prev = std::move(round);
        if (k < pencils.size()) active.push_back(&pencils[k]);
      }
      if (!done && prev && attempt == kRetryBudget - 1) {
        // ran out of minors without two equal rounds; accept the last
        // candidate if it divides the explicit determinant
        std::int64_t delta = 0;
        TPoly cur = d_full;
        while (auto q = cur.divided_by(prev->f)) {
          ++delta;
          cur = *q;
          if (cur.is_constant()) break;
        }
        if (delta >= 1) {
          f = prev->f;
          res.delta = delta;
          res.G = cur;
          done = true;
        }
      }
    }
    if (!done)
      throw MathError("gcd of maximal minors did not stabilize within the retry budget");
  }

  res.F = f;
  if (!res.delta) {
    std::int64_t delta = 0;
    TPoly cur = d_full;
    while (auto q = cur.divided_by(f)) {
      ++delta;
      cur = *q;
      if (cur.is_constant()) break;
    }
    res.delta = delta >= 1 ? std::optional<std::int64_t>(delta) : std::nullopt;
    res.G = delta >= 1 ? cur : TPoly();
  }
  res.verified = verify_implicit(res.F, recover_param_polys(m));
  return res;
}

std::optional<TPoly> interpolation_oracle(const std::array<ParamPoly, 4>& fs,
                                          std::int64_t degree, std::uint64_t seed) {
  if (degree < 1) throw InputError("oracle degree must be >= 1");
  SessionRng rng(seed);

  std::vector<Exp4> exps;
  for (std::int64_t a = degree; a >= 0; --a)
    for (std::int64_t b = degree - a; b >= 0; --b)
      for (std::int64_t c = degree - a - b; c >= 0; --c)
        exps.push_back({a, b, c, degree - a - b - c});
  std::sort(exps.begin(), exps.end());
  const std::size_t n_coeff = exps.size();
  const std::size_t n_points = 2 * n_coeff;

  struct IntLess {
    bool operator()(const std::array<Int, 4>& x, const std::array<Int, 4>& y) const {
      for (int i = 0; i < 4; ++i) {
        const int c = cmp(x[i], y[i]);
        if (c != 0) return c < 0;
      }
      return false;
    }
  };
  std::set<std::array<Int, 4>, IntLess> seen;
  std::vector<std::array<Int, 4>> points;
  std::size_t draws = 0;
  while (points.size() < n_points && draws < 64 * n_points) {
    ++draws;
    const Rational s = rng.rational(97), t = rng.rational(97);
    std::array<Rational, 4> p;
    bool all_zero = true;
    for (int i = 0; i < 4; ++i) {
      p[i] = eval_param_poly(fs[i], s, t);
      all_zero = all_zero && is_zero(p[i]);
    }
    if (all_zero) continue;
    // primitive integer representative of the projective point
    Int lcm(1), gcd(0);
    for (int i = 0; i < 4; ++i)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), p[i].get_den().get_mpz_t());
    std::array<Int, 4> z;
    for (int i = 0; i < 4; ++i) {
      z[i] = p[i].get_num() * (lcm / p[i].get_den());
      mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), z[i].get_mpz_t());
    }
    for (int i = 0; i < 4; ++i) mpz_divexact(z[i].get_mpz_t(), z[i].get_mpz_t(), gcd.get_mpz_t());
    if (seen.insert(z).second) points.push_back(std::move(z));
  }
  if (points.size() < n_points) return std::nullopt;

  QMatrix a(static_cast<Index>(n_points), static_cast<Index>(n_coeff));
  for (std::size_t i = 0; i < n_points; ++i) {
    // memoized powers of the four coordinates
    std::array<std::vector<Int>, 4> pows;
    for (int v = 0; v < 4; ++v) {
      pows[v].push_back(Int(1));
      for (std::int64_t e = 1; e <= degree; ++e)
        pows[v].push_back(pows[v].back() * points[i][v]);
    }
    for (std::size_t j = 0; j < n_coeff; ++j) {
      Int val = pows[0][exps[j][0]] * pows[1][exps[j][1]];
      val *= pows[2][exps[j][2]];
      val *= pows[3][exps[j][3]];
      a(static_cast<Index>(i), static_cast<Index>(j)) = Rational(val);
    }
  }

  const QMatrix kernel = nullspace_basis(a);
  if (kernel.cols() != 1) return std::nullopt;
  TPoly::TermMap terms;
  for (std::size_t j = 0; j < n_coeff; ++j)
    if (!is_zero(kernel(static_cast<Index>(j), 0)))
      terms[exps[j]] = kernel(static_cast<Index>(j), 0);
  return TPoly(std::move(terms)).normalized_primitive();
}

}  // namespace toricrep
