#pragma once

#include <optional>
#include <span>
#include <vector>

#include "toricrep/common.hpp"
#include "toricrep/param_poly.hpp"

namespace toricrep {

// Strictly sorted (lex), duplicate-free list of lattice points.
class PointList {
 public:
  PointList() = default;
  explicit PointList(std::vector<Point2> pts);

  std::size_t size() const { return pts_.size(); }
  bool empty() const { return pts_.empty(); }
  const Point2& operator[](std::size_t i) const { return pts_[i]; }
  const std::vector<Point2>& points() const { return pts_; }
  auto begin() const { return pts_.begin(); }
  auto end() const { return pts_.end(); }

  bool contains(Point2 p) const;
  // Index in lex order; throws std::out_of_range if absent.
  std::size_t index_of(Point2 p) const;
  bool operator==(const PointList& o) const { return pts_ == o.pts_; }

 private:
  std::vector<Point2> pts_;
};

// 2-D lattice polytope with a canonical minimal vertex set: counterclockwise
// starting at the lexicographically smallest vertex, no collinear vertices.
// Hulls of dimension 0 or 1 are representable but flagged degenerate.
class LatticePolytope {
 public:
  LatticePolytope() = default;

  static LatticePolytope hull_of(std::span<const Point2> points);

  const std::vector<Point2>& vertices() const { return verts_; }
  int dimension() const { return dim_; }
  bool degenerate() const { return dim_ < 2; }

  LatticePolytope scaled(std::int64_t k) const;
  bool contains(Point2 p) const;

  bool operator==(const LatticePolytope& o) const { return verts_ == o.verts_; }

 private:
  std::vector<Point2> verts_;
  int dim_ = -1;  // -1 empty, 0 point, 1 segment, 2 polygon
};

struct NewtonPolytope {
  LatticePolytope polytope;
  // Monomial shift applied so the union of supports has zero minimum in each
  // coordinate; subtract it to map back to the original exponents.
  Point2 shift{0, 0};
};

// Convex hull of all exponent pairs across the inputs, after the global
// normalization shift. Throws MathError if every input is zero.
NewtonPolytope newton_polytope(std::span<const ParamPoly> fs);

// All lattice points of the dilate n*P, n >= 1.
PointList lattice_points(const LatticePolytope& p, std::int64_t n);

struct Homothety {
  std::int64_t k = 1;
  LatticePolytope base;
};

// Largest k with P = k*Q for a lattice polytope Q. Requires P non-degenerate.
Homothety homothety_factor(const LatticePolytope& p);

// True iff every vertex of P lies in d*Q.
bool contains_scaled(const LatticePolytope& p, const LatticePolytope& q, std::int64_t d);

}  // namespace toricrep
