#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "phipoly/ff_polynomial.hpp"
#include "phipoly/numeric.hpp"

namespace phipoly {

// Strong pseudoprime test, deterministic below 2^64 by fixed witness set;
// above that it falls back to GMP's probabilistic test.
bool is_prime(const Int& p);
bool is_prime_u64(std::uint64_t p);

// Rabin irreducibility: g irreducible over F_q iff x^(q^n) = x mod g and
// gcd(x^(q^(n/t)) - x, g) = 1 for every prime t dividing n = deg g.
bool ff_irreducible(const FfPolynomial& g);

// Irreducible-factor degrees of the reduction of some f mod q, with the
// squarefree gate recorded. When squarefree is false the degrees are not
// populated and the record must be skipped by consumers.
struct DegreePartition {
  std::uint64_t modulus = 0;
  std::vector<int> degrees;  // sorted ascending
  bool squarefree = false;

  int total() const;
};

// Degrees multiset via the x^(q^d) - x cascade: each stage strips the
// product of all irreducible factors of degree d, contributing deg/d copies
// of d. Non-squarefree input yields squarefree = false and no degrees.
DegreePartition distinct_degree_factorization(const FfPolynomial& g);

// Cantor-Zassenhaus split of a product of irreducibles of equal degree d.
// Deterministic given the generator state.
std::vector<FfPolynomial> equal_degree_factorization(const FfPolynomial& g,
                                                     int d,
                                                     std::mt19937_64& rng);

// Full irreducible factorization of a squarefree monic g, seeded.
std::vector<FfPolynomial> ff_factor_squarefree(const FfPolynomial& g,
                                               std::uint64_t seed);

enum class Verdict { Verified, Inconclusive };

// A degree partition of a true factorization over Q must coarsen every
// usable mod-q partition. Enumerates all partitions of n surviving that
// constraint; Verified when each has a part >= d. Throws domain_error if
// nothing survives (the supplied partitions are mutually inconsistent).
Verdict partition_consistency(int n, int d,
                              const std::vector<DegreePartition>& parts);

// The candidate partitions themselves, for diagnostics and tests.
std::vector<std::vector<int>> consistent_partitions(
    int n, const std::vector<DegreePartition>& parts);

}  // namespace phipoly
