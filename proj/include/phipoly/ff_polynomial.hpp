#pragma once

#include <cstdint>
#include <vector>

#include "phipoly/numeric.hpp"
#include "phipoly/polynomial.hpp"

namespace phipoly {

// Dense polynomial over the prime field F_q, q < 2^64. Coefficients are
// stored ascending and kept reduced mod q with no trailing zeros.
class FfPolynomial {
 public:
  explicit FfPolynomial(std::uint64_t q);
  FfPolynomial(std::uint64_t q, std::vector<std::uint64_t> coeffs);

  static FfPolynomial x(std::uint64_t q);
  static FfPolynomial constant(std::uint64_t q, std::uint64_t c);

  std::uint64_t modulus() const { return q_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::uint64_t coefficient(int i) const;
  std::uint64_t leading() const;
  const std::vector<std::uint64_t>& coefficients() const { return coeffs_; }

  bool is_monic() const { return !is_zero() && leading() == 1; }
  FfPolynomial monic() const;
  FfPolynomial derivative() const;
  std::uint64_t eval(std::uint64_t point) const;

  friend FfPolynomial operator+(const FfPolynomial& a, const FfPolynomial& b);
  friend FfPolynomial operator-(const FfPolynomial& a, const FfPolynomial& b);
  friend FfPolynomial operator*(const FfPolynomial& a, const FfPolynomial& b);
  friend bool operator==(const FfPolynomial& a, const FfPolynomial& b);
  friend bool operator!=(const FfPolynomial& a, const FfPolynomial& b);

 private:
  void normalize();

  std::uint64_t q_;
  std::vector<std::uint64_t> coeffs_;
};

// Remainder of a by b; b nonzero (any leading coefficient, q prime).
FfPolynomial ff_rem(const FfPolynomial& a, const FfPolynomial& b);

// Euclidean division a = qb + r with deg r < deg b.
void ff_divmod(const FfPolynomial& a, const FfPolynomial& b,
               FfPolynomial& quotient, FfPolynomial& remainder);

// Monic gcd; gcd(0, 0) = 0.
FfPolynomial ff_gcd(FfPolynomial a, FfPolynomial b);

// base^e mod m, square and multiply.
FfPolynomial ff_powmod(const FfPolynomial& base, std::uint64_t e,
                       const FfPolynomial& m);

// Coefficient-wise reduction; representatives land in [0, q).
FfPolynomial reduce_mod_p(const IntPolynomial& f, std::uint64_t q);

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t q);
std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t q);
std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t q);

}  // namespace phipoly
