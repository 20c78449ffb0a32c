#pragma once

#include <optional>
#include <vector>

#include "phipoly/newton_polygon.hpp"
#include "phipoly/phi_expansion.hpp"
#include "phipoly/polynomial.hpp"
#include "phipoly/valuation.hpp"
#include "phipoly/value_group.hpp"

namespace phipoly {

// Positive edge j spanning [k_{j-1}, k_j] with slope lambda_j and the
// smallest positive d_j such that d_j * lambda_j lies in the value group.
struct EdgeBound {
  int k_from = 0;
  int k_to = 0;
  ValueVec slope;
  Int d;
};

// Coprimality-based bound data: k minimizes r_i/(s-i) over i < s (smallest
// index among minimizers); the bound s-k is usable only when gcd(r_k, s-k)
// is 1, recorded in `applicable`.
struct LegacyRecord {
  int k = 0;
  Int r_k;
  int s = 0;
  bool applicable = false;
  int bound = 0;  // s - k, meaningful only when applicable
};

struct BoundReport {
  int n = 0;              // phi-degree of the analyzed polynomial
  int m = 1;              // deg phi
  int s = 0;              // smallest index with v^x(a_s) = 0
  int stripped_phi_power = 0;
  int deg_analyzed = 0;   // x-degree after stripping (n*m in valuation mode)
  NewtonPolygon polygon;
  std::vector<EdgeBound> edges;  // ordered by k, steepest slope first
  int bound = 0;          // max_j d_j * m
  int cofactor = 0;       // deg_analyzed - bound
  std::optional<LegacyRecord> legacy;
};

// Full pipeline for f over Q with the p-adic valuation and a monic phi that
// is irreducible mod p: strip the maximal phi power, expand, take Gaussian
// valuations, build the polygon, and turn each positive edge into a degree
// bound d_j * m. The result bounds an irreducible factor's degree from
// below. Throws inapplicable_error when the hypotheses fail on this input
// (no unit coefficient, or the constant term is already a unit) and
// domain_error for malformed inputs (p not prime, phi not monic or
// reducible mod p, f zero).
BoundReport factor_degree_bound(const IntPolynomial& f, const Int& p,
                                const IntPolynomial& phi);

// Same pipeline fed directly with v^x(a_i) values over an arbitrary value
// group; m is the nominal phi-degree. vals[i] must lie in the group when
// finite.
BoundReport bound_from_valuations(const std::vector<ExtendedValue>& vals,
                                  const ValueGroup& group, int m);

// Upper bound on min(deg f1, deg f2) over factorizations f = f1 f2.
int cofactor_bound(const BoundReport& report, int deg_f);

// The coprimality bound on its own. Throws inapplicable_error when no
// coefficient is a unit mod p or when s = 0.
LegacyRecord legacy_bound(const IntPolynomial& f, const Int& p);

// Closed form for x^n + a x^m + b with s = v(a), r = v(b) under the
// hypothesis (n-m) r > n s > 0:
// max{ m/gcd(m, r-s), (n-m)/gcd(n-m, s) }.
int trinomial_bound(int n, int m, int s, int r);

// A concrete witness x^n + p^s x^m + p^r realizing the trinomial data.
IntPolynomial realize_trinomial(int n, int m, int s, int r, const Int& p);

}  // namespace phipoly
