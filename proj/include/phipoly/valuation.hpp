#pragma once

#include "phipoly/numeric.hpp"
#include "phipoly/polynomial.hpp"
#include "phipoly/value_group.hpp"

namespace phipoly {

// v_p(c): multiplicity of the prime p in c, INFINITY for c = 0.
// p is caller-checked via is_prime; p >= 2 is enforced here.
ExtendedValue padic_valuation(const Int& c, const Int& p);

// Q with the p-adic valuation: the one concrete rank-1 base field. Abstract
// valuation-vector input bypasses this and feeds the engine directly.
class ValuationContext {
 public:
  explicit ValuationContext(Int prime);

  const Int& prime() const { return prime_; }
  ValueGroup group() const { return ValueGroup::integers(); }

  ExtendedValue value_of(const Int& c) const { return padic_valuation(c, prime_); }
  ExtendedValue gauss(const IntPolynomial& h) const;

 private:
  Int prime_;
};

// Gaussian prolongation of v to polynomials: the minimum coefficient
// valuation, INFINITY exactly for the zero polynomial.
ExtendedValue gauss_valuation(const IntPolynomial& h, const ValuationContext& ctx);

}  // namespace phipoly
