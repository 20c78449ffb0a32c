#pragma once

#include <vector>

#include "phipoly/value_group.hpp"

namespace phipoly {

// P_i = (i, v^x(a_{n-i})). Infinite valuations mark zero coefficients; such
// points are kept for display but never become vertices.
struct PolygonPoint {
  int i = 0;
  ExtendedValue val;
};

struct PolygonEdge {
  int from_index = 0;
  int to_index = 0;
  ValueVec slope;     // (val at to - val at from) / (to - from)
  int lattice_width = 0;
  ValueVec rise;      // val at to - val at from, so rise = slope * width
};

struct NewtonPolygon {
  int n = 0;
  std::vector<PolygonPoint> points;
  std::vector<PolygonPoint> vertices;
  std::vector<PolygonEdge> edges;
};

// Greedy construction: starting from the leftmost finite point, repeatedly
// take the minimal slope to a later finite point, breaking ties by the
// LARGEST index, so collinear interior points are never vertices.
// Points must have strictly increasing abscissas and at least two finite
// entries; throws degenerate_input_error otherwise.
NewtonPolygon build_polygon(const std::vector<PolygonPoint>& points);

// Independent route to the same object: monotone-chain lower convex hull
// with exact rational cross products, collinear points dropped. Kept
// deliberately separate from build_polygon; tests require bit-identical
// results from both.
NewtonPolygon hull_oracle(const std::vector<PolygonPoint>& points);

// Exact test that (i, val) lies on or above the lower boundary.
bool on_or_above(const NewtonPolygon& poly, int i, const ValueVec& val);

// Positive-slope edge in k-coordinates, k = n - abscissa. Edge j spans
// [k_from, k_to] = [k_{j-1}, k_j] and carries slope lambda_j.
struct PositiveEdge {
  int k_from = 0;
  int k_to = 0;
  ValueVec slope;
};

// The positive-slope suffix of the polygon, translated to k-coordinates and
// ordered so the steepest slope comes first (j = 1 adjacent to k_0 = 0).
// Returns an empty sequence when no edge has positive slope. When nonempty
// the chain must run exactly from k = 0 to k = s; anything else means the
// caller's s is wrong or the input was not prepared by the engine.
std::vector<PositiveEdge> positive_edges(const NewtonPolygon& poly, int s);

}  // namespace phipoly
