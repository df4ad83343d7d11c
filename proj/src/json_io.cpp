#include "toricrep/json_io.hpp"

namespace toricrep {

OrderedJson polytope_json(const LatticePolytope& p) {
  OrderedJson verts = OrderedJson::array();
  for (const Point2& v : p.vertices()) verts.push_back({v[0], v[1]});
  return OrderedJson{{"vertices", std::move(verts)}};
}

LatticePolytope polytope_from_json(const OrderedJson& j) {
  const OrderedJson* arr = nullptr;
  if (j.is_array())
    arr = &j;
  else if (j.is_object() && j.contains("vertices"))
    arr = &j.at("vertices");
  else
    throw InputError("polytope JSON must be {\"vertices\": [[x,y],...]}");
  std::vector<Point2> pts;
  for (const auto& v : *arr) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() ||
        !v[1].is_number_integer())
      throw InputError("polytope vertices must be integer pairs");
    pts.push_back({v[0].get<std::int64_t>(), v[1].get<std::int64_t>()});
  }
  return LatticePolytope::hull_of(pts);
}

OrderedJson rep_matrix_json(const RepMatrix& m) {
  OrderedJson rows = OrderedJson::array();
  for (const Point2& p : m.row_basis.points) rows.push_back({p[0], p[1]});
  OrderedJson mats;
  static const char* names[4] = {"T1", "T2", "T3", "T4"};
  for (int i = 0; i < 4; ++i) {
    OrderedJson mat = OrderedJson::array();
    for (Index r = 0; r < m.rows(); ++r) {
      OrderedJson row = OrderedJson::array();
      for (Index c = 0; c < m.cols(); ++c)
        row.push_back(to_fraction_string(m.coeff[i](r, c)));
      mat.push_back(std::move(row));
    }
    mats[names[i]] = std::move(mat);
  }
  return OrderedJson{{"nu0", m.nu0},
                     {"d", m.d},
                     {"rows", std::move(rows)},
                     {"cols", m.cols()},
                     {"M", std::move(mats)}};
}

OrderedJson tpoly_json(const TPoly& f) {
  OrderedJson terms = OrderedJson::array();
  for (const auto& [e, c] : f.terms()) {
    OrderedJson term;
    term["exp"] = {e[0], e[1], e[2], e[3]};
    term["coeff"] = c.get_den() == 1 ? c.get_num().get_str() : c.get_str();
    terms.push_back(std::move(term));
  }
  return OrderedJson{{"degree", f.total_degree()}, {"terms", std::move(terms)}};
}

OrderedJson implicit_result_json(const ImplicitResult& r) {
  OrderedJson out;
  out["F"] = tpoly_json(r.F);
  if (r.delta)
    out["delta"] = *r.delta;
  else
    out["delta"] = nullptr;
  out["G_degree"] = r.G.is_zero() ? 0 : r.G.total_degree();
  out["verified"] = r.verified;
  return out;
}

}  // namespace toricrep
