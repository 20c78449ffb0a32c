#pragma once

#include <vector>

#include "phipoly/polynomial.hpp"
#include "phipoly/valuation.hpp"
#include "phipoly/value_group.hpp"

namespace phipoly {

// phi-adic expansion f = sum a_i(x) phi^i with deg a_i < deg phi.
// Coefficients are stored ascending in i; the top one is nonzero.
struct PhiExpansion {
  IntPolynomial phi;
  std::vector<IntPolynomial> coefficients;

  int length() const { return static_cast<int>(coefficients.size()) - 1; }
};

// Requires phi monic of degree >= 1 and f nonzero; throws domain_error
// otherwise. Expansion by repeated division, so it is exact and unique.
PhiExpansion phi_expansion(const IntPolynomial& f, const IntPolynomial& phi);

// Expansion coefficients mapped through the Gaussian prolongation, ready to
// feed the polygon builder: entry i is v^x(a_i).
std::vector<ExtendedValue> expansion_valuations(const PhiExpansion& e,
                                                const ValuationContext& ctx);

}  // namespace phipoly
