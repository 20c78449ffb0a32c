#include "phipoly/phi_expansion.hpp"

#include "phipoly/error.hpp"

namespace phipoly {

PhiExpansion phi_expansion(const IntPolynomial& f, const IntPolynomial& phi) {
  if (phi.degree() < 1 || !phi.is_monic()) {
    throw domain_error("phi_expansion: phi must be monic of degree >= 1");
  }
  if (f.is_zero()) {
    throw domain_error("phi_expansion: f must be nonzero");
  }
  PhiExpansion out;
  out.phi = phi;
  IntPolynomial cur = f;
  while (!cur.is_zero()) {
    IntPolynomial q, r;
    divmod_monic(cur, phi, q, r);
    out.coefficients.push_back(std::move(r));
    cur = std::move(q);
  }
  return out;
}

std::vector<ExtendedValue> expansion_valuations(const PhiExpansion& e,
                                                const ValuationContext& ctx) {
  std::vector<ExtendedValue> vals;
  vals.reserve(e.coefficients.size());
  for (const IntPolynomial& a : e.coefficients) vals.push_back(ctx.gauss(a));
  return vals;
}

}  // namespace phipoly
