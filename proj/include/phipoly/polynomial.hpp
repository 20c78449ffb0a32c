#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "phipoly/numeric.hpp"

namespace phipoly {

// Dense univariate polynomial over Z. coefficient(i) is the coefficient of
// x^i; the stored vector is normalized so the top entry is nonzero (empty for
// the zero polynomial). Values are immutable in spirit: every operation
// returns a fresh polynomial, so sharing across threads is safe.
class IntPolynomial {
 public:
  IntPolynomial() = default;  // zero polynomial
  explicit IntPolynomial(std::vector<Int> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);  // ascending powers

  static IntPolynomial x();
  static IntPolynomial constant(Int c);
  static IntPolynomial monomial(Int c, std::size_t power);

  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  // 0 beyond the degree.
  const Int& coefficient(std::size_t i) const;
  const std::vector<Int>& coefficients() const { return coeffs_; }
  const Int& leading_coefficient() const;
  bool is_monic() const;

  IntPolynomial operator+(const IntPolynomial& o) const;
  IntPolynomial operator-(const IntPolynomial& o) const;
  IntPolynomial operator-() const;
  IntPolynomial operator*(const IntPolynomial& o) const;
  IntPolynomial operator*(const Int& c) const;
  bool operator==(const IntPolynomial& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const IntPolynomial& o) const { return coeffs_ != o.coeffs_; }

  IntPolynomial pow(unsigned e) const;
  IntPolynomial derivative() const;
  Int eval(const Int& x) const;
  IntPolynomial compose_shift(const Int& c) const;  // f(x + c)

  // gcd of the coefficients, nonnegative; 0 for the zero polynomial.
  Int content() const;
  IntPolynomial primitive_part() const;

 private:
  void normalize();
  std::vector<Int> coeffs_;
  static const Int zero_;
};

// Euclidean division by a monic divisor. Quotient and remainder stay
// integral; deg r < deg d. Throws domain_error if d is not monic.
void divmod_monic(const IntPolynomial& num, const IntPolynomial& den,
                  IntPolynomial& quotient, IntPolynomial& remainder);

// gcd over Q, returned as a primitive integer polynomial with positive
// leading coefficient. Used for squarefreeness checks; desk-scale degrees.
IntPolynomial gcd_over_q(const IntPolynomial& a, const IntPolynomial& b);

bool is_squarefree_over_q(const IntPolynomial& f);

}  // namespace phipoly
