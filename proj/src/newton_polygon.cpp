#include "phipoly/newton_polygon.hpp"

#include "phipoly/error.hpp"

namespace phipoly {

namespace {

struct FinitePoint {
  int i;
  ValueVec val;
};

std::vector<FinitePoint> finite_points(const std::vector<PolygonPoint>& points) {
  std::vector<FinitePoint> fin;
  int rank = -1;
  for (std::size_t k = 0; k < points.size(); ++k) {
    if (k > 0 && points[k].i <= points[k - 1].i) {
      throw domain_error("polygon points must have strictly increasing abscissas");
    }
    if (points[k].val.is_infinite()) continue;
    const ValueVec& v = points[k].val.value();
    if (rank < 0) {
      rank = v.rank();
    } else if (v.rank() != rank) {
      throw domain_error("polygon points mix value-group ranks");
    }
    fin.push_back({points[k].i, v});
  }
  if (fin.size() < 2) {
    throw degenerate_input_error("polygon needs at least two finite points");
  }
  return fin;
}

NewtonPolygon assemble(const std::vector<PolygonPoint>& points,
                       const std::vector<FinitePoint>& verts) {
  NewtonPolygon poly;
  poly.n = points.back().i;
  poly.points = points;
  for (const FinitePoint& v : verts) {
    poly.vertices.push_back({v.i, ExtendedValue::finite(v.val)});
  }
  for (std::size_t t = 1; t < verts.size(); ++t) {
    PolygonEdge e;
    e.from_index = verts[t - 1].i;
    e.to_index = verts[t].i;
    e.lattice_width = e.to_index - e.from_index;
    e.rise = verts[t].val - verts[t - 1].val;
    e.slope = e.rise.scaled(make_rat(1, e.lattice_width));
    poly.edges.push_back(std::move(e));
  }
  return poly;
}

}  // namespace

NewtonPolygon build_polygon(const std::vector<PolygonPoint>& points) {
  std::vector<FinitePoint> fin = finite_points(points);
  std::vector<FinitePoint> verts;
  std::size_t cur = 0;
  verts.push_back(fin[cur]);
  while (cur + 1 < fin.size()) {
    std::size_t best = cur + 1;
    ValueVec best_slope =
        (fin[best].val - fin[cur].val).scaled(make_rat(1, fin[best].i - fin[cur].i));
    for (std::size_t j = cur + 2; j < fin.size(); ++j) {
      ValueVec slope =
          (fin[j].val - fin[cur].val).scaled(make_rat(1, fin[j].i - fin[cur].i));
      // Minimal slope wins; on a tie the larger index wins.
      if (slope <= best_slope) {
        best = j;
        best_slope = std::move(slope);
      }
    }
    verts.push_back(fin[best]);
    cur = best;
  }
  return assemble(points, verts);
}

NewtonPolygon hull_oracle(const std::vector<PolygonPoint>& points) {
  std::vector<FinitePoint> fin = finite_points(points);
  std::vector<FinitePoint> hull;
  for (const FinitePoint& p : fin) {
    while (hull.size() >= 2) {
      const FinitePoint& o = hull[hull.size() - 2];
      const FinitePoint& a = hull[hull.size() - 1];
      // a lies on or above chord o-p exactly when this cross product is <= 0.
      ValueVec cross = (p.val - o.val).scaled(Rat(a.i - o.i)) -
                       (a.val - o.val).scaled(Rat(p.i - o.i));
      if (cross.sign() <= 0) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(p);
  }
  return assemble(points, hull);
}

bool on_or_above(const NewtonPolygon& poly, int i, const ValueVec& val) {
  if (poly.vertices.empty()) {
    throw domain_error("on_or_above: polygon has no vertices");
  }
  if (i < poly.vertices.front().i || i > poly.vertices.back().i) {
    throw domain_error("on_or_above: abscissa outside the polygon span");
  }
  if (i == poly.vertices.front().i) {
    return val >= poly.vertices.front().val.value();
  }
  for (const PolygonEdge& e : poly.edges) {
    if (i > e.from_index && i <= e.to_index) {
      const ValueVec& from_val = [&]() -> const ValueVec& {
        for (const PolygonPoint& v : poly.vertices) {
          if (v.i == e.from_index) return v.val.value();
        }
        throw internal_check_error("edge endpoint missing from vertex list");
      }();
      // val >= from_val + slope*(i - from) without division:
      // (val - from_val)*width >= rise*(i - from).
      ValueVec lhs = (val - from_val).scaled(Rat(e.lattice_width));
      ValueVec rhs = e.rise.scaled(Rat(i - e.from_index));
      return lhs >= rhs;
    }
  }
  throw internal_check_error("abscissa not covered by any edge");
}

std::vector<PositiveEdge> positive_edges(const NewtonPolygon& poly, int s) {
  std::vector<PositiveEdge> out;
  for (auto it = poly.edges.rbegin(); it != poly.edges.rend(); ++it) {
    if (it->slope.sign() <= 0) break;
    PositiveEdge e;
    e.k_from = poly.n - it->to_index;
    e.k_to = poly.n - it->from_index;
    e.slope = it->slope;
    out.push_back(std::move(e));
  }
  if (out.empty()) return out;
  if (out.front().k_from != 0) {
    throw domain_error("positive edges do not reach k = 0; strip phi factors first");
  }
  if (out.back().k_to != s) {
    throw domain_error("positive edges end at k = " +
                       std::to_string(out.back().k_to) + ", expected s = " +
                       std::to_string(s));
  }
  return out;
}

}  // namespace phipoly
