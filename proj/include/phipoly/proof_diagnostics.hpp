#pragma once

#include <vector>

#include "phipoly/bound_engine.hpp"
#include "phipoly/polynomial.hpp"
#include "phipoly/value_group.hpp"

namespace phipoly {

// The valuation data needed to evaluate w at a fixed positive slope lambda:
// w(f) = min_i { v^x(a_i) + i*lambda } over the phi-expansion coefficients.
// Everything here depends only on lambda and the expansion valuations.
struct SlopeValuation {
  ValueVec lambda;
  std::vector<ExtendedValue> expansion_vals;  // v^x(a_i), ascending in i
};

// Exact minimum of v^x(a_i) + i*lambda over finite entries.
// Throws domain_error when lambda <= 0 or no entry is finite.
ValueVec w_value(const SlopeValuation& sv);

// Minimum and maximum indices attaining w_value.
struct IndexPair {
  int min_index = 0;  // called I in the diagnostics output
  int max_index = 0;  // called S
};
IndexPair index_pair(const SlopeValuation& sv);

// Per-edge consistency record. For edge j with slope lambda_j spanning
// [k_{j-1}, k_j], all four flags must hold for a well-formed report:
//   endpoints_match:     (I, S) = (k_{j-1}, k_j)
//   w_agrees:            w = v(a_{k_{j-1}}) + k_{j-1} lambda
//                          = v(a_{k_j})     + k_j     lambda
//   lower_chords_steep:  chords into k_j from i < k_j have slope >= lambda,
//                        with the smallest equality index exactly k_{j-1}
//   upper_chords_flat:   chords from k_{j-1} to i >= k_j have slope <= lambda,
//                        with equality exactly at i = k_j
struct EdgeIdentityVerdict {
  int edge = 0;  // 1-based, steepest slope first
  int k_from = 0;
  int k_to = 0;
  ValueVec lambda;
  ValueVec w;
  IndexPair indices;
  bool endpoints_match = false;
  bool w_agrees = false;
  bool lower_chords_steep = false;
  bool upper_chords_flat = false;

  bool ok() const {
    return endpoints_match && w_agrees && lower_chords_steep && upper_chords_flat;
  }
};

// The expansion valuations a report was computed from, recovered from its
// polygon points (vals[k] sits at abscissa n - k).
std::vector<ExtendedValue> expansion_vals_from(const BoundReport& report);

// Evaluate the verdicts for every edge of a report against the expansion
// valuations the report was built from (index i = coefficient index).
std::vector<EdgeIdentityVerdict> check_edge_identities(
    const BoundReport& report, const std::vector<ExtendedValue>& expansion_vals);

// Same, but any failed verdict is an internal consistency error.
void require_edge_identities(const BoundReport& report,
                             const std::vector<ExtendedValue>& expansion_vals);

// Empirical check that I and S add under multiplication at a fixed slope:
// I(fg) = I(f) + I(g) and S(fg) = S(f) + S(g).
struct AdditivityVerdict {
  IndexPair left;
  IndexPair right;
  IndexPair product;
  bool additive = false;
};

AdditivityVerdict additivity_check(const IntPolynomial& f,
                                   const IntPolynomial& g,
                                   const IntPolynomial& phi, const Int& p,
                                   const ValueVec& lambda);

}  // namespace phipoly
