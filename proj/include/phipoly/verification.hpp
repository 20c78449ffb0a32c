#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "phipoly/bound_engine.hpp"
#include "phipoly/finite_field.hpp"
#include "phipoly/polynomial.hpp"

namespace phipoly {

enum class CertificateKind {
  Eisenstein,            // p | a_i for i < n, p notdiv a_n, p^2 notdiv a_0
  ShiftedEisenstein,     // f(x) = h(x + shift) with h Eisenstein at p
  FiniteFieldIrreducible // f mod q irreducible with degree preserved
};

struct Certificate {
  CertificateKind kind = CertificateKind::Eisenstein;
  Int p;      // certificate prime (field modulus for the finite-field kind)
  Int shift;  // ShiftedEisenstein only

  std::string describe() const;
};

// A polynomial whose irreducibility over Q is forced by its certificate.
// The predicate is re-checked on construction; a bad pair throws.
struct CertifiedIrreducible {
  IntPolynomial poly;
  int degree = 0;
  Certificate certificate;
};

CertifiedIrreducible certify(IntPolynomial poly, Certificate cert);

// Random certified irreducible of the exact degree. Bounded retries with
// seed progression; exhaustion throws internal_check_error.
CertifiedIrreducible generate_certified(int degree, CertificateKind method,
                                        std::uint64_t seed);

struct CampaignViolation {
  IntPolynomial f;
  Int p;
  int bound = 0;
  int max_true_degree = 0;
  std::vector<int> factor_degrees;
  std::string reproducer;  // CLI-replayable input line
};

struct CampaignSummary {
  std::uint64_t seed = 0;
  int trials = 0;
  long products_tested = 0;
  long applicable = 0;    // (f, p) pairs where the hypotheses held
  long inapplicable = 0;  // pairs rejected by the hypotheses
  std::vector<CampaignViolation> violations;

  bool passed() const { return violations.empty(); }
};

// For each trial, multiply 1-3 certified irreducibles and check that the
// reported bound never exceeds the largest true factor degree, at every
// prime in the scan set (primes up to 50 plus the certificate primes).
// Deterministic for a fixed seed.
CampaignSummary soundness_campaign(int count, int max_degree,
                                   std::uint64_t seed);

struct PartitionOutcome {
  Verdict verdict = Verdict::Inconclusive;
  std::string reason;
  std::vector<DegreePartition> partitions;       // the usable ones
  std::vector<std::uint64_t> skipped_primes;     // unusable reductions
};

// Confirm "some irreducible factor has degree >= d" through mod-q degree
// partitions: every partition of deg f compatible with all usable reductions
// must have a part >= d. One-sided: Inconclusive never refutes the bound.
// f must be squarefree over Q.
PartitionOutcome partition_verify(const IntPolynomial& f, int d,
                                  const std::vector<std::uint64_t>& primes);

PartitionOutcome partition_verify(const IntPolynomial& f,
                                  const BoundReport& report,
                                  const std::vector<std::uint64_t>& primes);

// Primes up to the limit, ascending.
std::vector<std::uint64_t> small_primes(std::uint64_t limit);

}  // namespace phipoly
