#include "toricrep/polytope.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>

namespace toricrep {

namespace {

std::int64_t cross(Point2 o, Point2 a, Point2 b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b, r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

}  // namespace

PointList::PointList(std::vector<Point2> pts) : pts_(std::move(pts)) {
  std::sort(pts_.begin(), pts_.end());
  pts_.erase(std::unique(pts_.begin(), pts_.end()), pts_.end());
}

bool PointList::contains(Point2 p) const {
  return std::binary_search(pts_.begin(), pts_.end(), p);
}

std::size_t PointList::index_of(Point2 p) const {
  auto it = std::lower_bound(pts_.begin(), pts_.end(), p);
  if (it == pts_.end() || *it != p) throw std::out_of_range("point not in list");
  return static_cast<std::size_t>(it - pts_.begin());
}

LatticePolytope LatticePolytope::hull_of(std::span<const Point2> points) {
  std::vector<Point2> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  LatticePolytope poly;
  if (pts.empty()) return poly;
  if (pts.size() == 1) {
    poly.verts_ = pts;
    poly.dim_ = 0;
    return poly;
  }

  bool collinear = true;
  for (std::size_t i = 2; i < pts.size() && collinear; ++i)
    collinear = cross(pts[0], pts[1], pts[i]) == 0;
  if (collinear) {
    // endpoints in lex order
    poly.verts_ = {pts.front(), pts.back()};
    poly.dim_ = 1;
    return poly;
  }

  // monotone chain, strict turns only (collinear boundary points dropped)
  std::vector<Point2> lower, upper;
  for (const Point2& p : pts) {
    while (lower.size() >= 2 && cross(lower[lower.size() - 2], lower.back(), p) <= 0)
      lower.pop_back();
    lower.push_back(p);
  }
  for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
    while (upper.size() >= 2 && cross(upper[upper.size() - 2], upper.back(), *it) <= 0)
      upper.pop_back();
    upper.push_back(*it);
  }
  lower.pop_back();
  upper.pop_back();
  poly.verts_ = std::move(lower);
  poly.verts_.insert(poly.verts_.end(), upper.begin(), upper.end());
  poly.dim_ = 2;
  return poly;
}

LatticePolytope LatticePolytope::scaled(std::int64_t k) const {
  LatticePolytope out = *this;
  for (Point2& v : out.verts_) v = k * v;
  return out;
}

bool LatticePolytope::contains(Point2 p) const {
  switch (dim_) {
    case 0:
      return p == verts_[0];
    case 1: {
      const Point2 a = verts_[0], b = verts_[1];
      if (cross(a, b, p) != 0) return false;
      return std::min(a[0], b[0]) <= p[0] && p[0] <= std::max(a[0], b[0]) &&
             std::min(a[1], b[1]) <= p[1] && p[1] <= std::max(a[1], b[1]);
    }
    case 2: {
      const std::size_t n = verts_.size();
      for (std::size_t i = 0; i < n; ++i)
        if (cross(verts_[i], verts_[(i + 1) % n], p) < 0) return false;
      return true;
    }
    default:
      return false;
  }
}

NewtonPolytope newton_polytope(std::span<const ParamPoly> fs) {
  std::vector<Point2> support;
  for (const ParamPoly& f : fs)
    for (const Point2& e : f.support()) support.push_back(e);
  if (support.empty()) throw MathError("newton polytope of all-zero input");

  Point2 shift = support[0];
  for (const Point2& e : support) {
    shift[0] = std::min(shift[0], e[0]);
    shift[1] = std::min(shift[1], e[1]);
  }
  for (Point2& e : support) e = e - shift;

  NewtonPolytope out;
  out.polytope = LatticePolytope::hull_of(support);
  out.shift = {-shift[0], -shift[1]};
  return out;
}

PointList lattice_points(const LatticePolytope& p, std::int64_t n) {
  if (n < 1) throw InputError("dilation factor must be >= 1");
  if (p.dimension() < 0) throw InputError("lattice points of an empty polytope");

  const LatticePolytope sp = p.scaled(n);
  const auto& verts = sp.vertices();
  std::vector<Point2> pts;

  if (sp.dimension() == 0) {
    pts.push_back(verts[0]);
    return PointList(std::move(pts));
  }
  if (sp.dimension() == 1) {
    const Point2 a = verts[0], b = verts[1];
    const Point2 dvec = b - a;
    const std::int64_t g = std::gcd(std::abs(dvec[0]), std::abs(dvec[1]));
    for (std::int64_t k = 0; k <= g; ++k)
      pts.push_back({a[0] + k * dvec[0] / g, a[1] + k * dvec[1] / g});
    return PointList(std::move(pts));
  }

  std::int64_t xmin = verts[0][0], xmax = verts[0][0];
  for (const Point2& v : verts) {
    xmin = std::min(xmin, v[0]);
    xmax = std::max(xmax, v[0]);
  }
  const std::size_t nv = verts.size();
  for (std::int64_t x = xmin; x <= xmax; ++x) {
    std::int64_t ylo = std::numeric_limits<std::int64_t>::min();
    std::int64_t yhi = std::numeric_limits<std::int64_t>::max();
    bool feasible = true;
    for (std::size_t i = 0; i < nv && feasible; ++i) {
      const Point2 a = verts[i], b = verts[(i + 1) % nv];
      // interior side of edge a->b: (b-a) x (p-a) >= 0
      const std::int64_t dx = b[0] - a[0], dy = b[1] - a[1];
      const std::int64_t rhs = dy * (x - a[0]);
      if (dx > 0)
        ylo = std::max(ylo, a[1] + ceil_div(rhs, dx));
      else if (dx < 0)
        yhi = std::min(yhi, a[1] + floor_div(rhs, dx));
      else if (dy > 0)
        feasible = x <= a[0];
      else
        feasible = x >= a[0];
    }
    if (!feasible) continue;
    for (std::int64_t y = ylo; y <= yhi; ++y) pts.push_back({x, y});
  }
  return PointList(std::move(pts));
}

Homothety homothety_factor(const LatticePolytope& p) {
  if (p.degenerate()) throw MathError("homothety factor of a degenerate polytope");
  std::int64_t g = 0;
  for (const Point2& v : p.vertices())
    g = std::gcd(g, std::gcd(std::abs(v[0]), std::abs(v[1])));
  Homothety h;
  h.k = g == 0 ? 1 : g;
  std::vector<Point2> scaled;
  for (const Point2& v : p.vertices()) scaled.push_back({v[0] / h.k, v[1] / h.k});
  h.base = LatticePolytope::hull_of(scaled);
  return h;
}

bool contains_scaled(const LatticePolytope& p, const LatticePolytope& q, std::int64_t d) {
  if (d < 1) throw InputError("scale factor must be >= 1");
  const LatticePolytope dq = q.scaled(d);
  for (const Point2& v : p.vertices())
    if (!dq.contains(v)) return false;
  return true;
}

}  // namespace toricrep
