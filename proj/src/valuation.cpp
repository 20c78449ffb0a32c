#include "phipoly/valuation.hpp"

#include "phipoly/error.hpp"
#include "phipoly/finite_field.hpp"

namespace phipoly {

ExtendedValue padic_valuation(const Int& c, const Int& p) {
  if (p < 2) throw domain_error("padic_valuation: p must be at least 2");
  if (c == 0) return ExtendedValue::infinity();
  Int reduced;
  mp_bitcnt_t e = mpz_remove(reduced.get_mpz_t(), c.get_mpz_t(), p.get_mpz_t());
  return ExtendedValue::finite(Rat(static_cast<unsigned long>(e)));
}

ValuationContext::ValuationContext(Int prime) : prime_(std::move(prime)) {
  if (!is_prime(prime_)) {
    throw domain_error("valuation: " + prime_.get_str() + " is not prime");
  }
}

ExtendedValue ValuationContext::gauss(const IntPolynomial& h) const {
  return gauss_valuation(h, *this);
}

ExtendedValue gauss_valuation(const IntPolynomial& h, const ValuationContext& ctx) {
  if (h.is_zero()) return ExtendedValue::infinity();
  ExtendedValue best = ExtendedValue::infinity();
  for (int i = 0; i <= h.degree(); ++i) {
    const Int& c = h.coefficient(i);
    if (c == 0) continue;
    ExtendedValue v = ctx.value_of(c);
    if (v < best) best = std::move(v);
  }
  return best;
}

}  // namespace phipoly
