#include <algorithm>
#include <vector>

#include "doctest.h"
#include "phipoly/bound_engine.hpp"
#include "phipoly/error.hpp"
#include "phipoly/verification.hpp"

using namespace phipoly;

TEST_CASE("eisenstein certificates") {
  Certificate cert{CertificateKind::Eisenstein, Int(3), Int(0)};
  CertifiedIrreducible c = certify(IntPolynomial{3, 0, 0, 0, 0, 1}, cert);
  CHECK(c.degree == 5);
  CHECK(c.certificate.describe() == "eisenstein(p=3)");

  // constant term not divisible by p
  CHECK_THROWS_AS(certify(IntPolynomial{1, 0, 1},
                          Certificate{CertificateKind::Eisenstein, Int(2), Int(0)}),
                  domain_error);
  // p^2 divides the constant term
  CHECK_THROWS_AS(certify(IntPolynomial{4, 2, 1},
                          Certificate{CertificateKind::Eisenstein, Int(2), Int(0)}),
                  domain_error);
  // composite "prime"
  CHECK_THROWS_AS(certify(IntPolynomial{6, 6, 1},
                          Certificate{CertificateKind::Eisenstein, Int(6), Int(0)}),
                  domain_error);
}

TEST_CASE("shifted eisenstein certificates") {
  // x^2+2x+3 = (x+1)^2 + 2: eisenstein at 2 after undoing the shift by 1
  Certificate cert{CertificateKind::ShiftedEisenstein, Int(2), Int(1)};
  CertifiedIrreducible c = certify(IntPolynomial{3, 2, 1}, cert);
  CHECK(c.degree == 2);
  // the unshifted polynomial is not eisenstein itself
  CHECK_THROWS_AS(certify(IntPolynomial{3, 2, 1},
                          Certificate{CertificateKind::Eisenstein, Int(2), Int(0)}),
                  domain_error);
}

TEST_CASE("finite-field certificates check degree preservation") {
  Certificate cert{CertificateKind::FiniteFieldIrreducible, Int(2), Int(0)};
  CHECK_NOTHROW(certify(IntPolynomial{1, 1, 1}, cert));  // x^2+x+1 mod 2
  CHECK_THROWS_AS(certify(IntPolynomial{1, 0, 1}, cert), domain_error);
  // leading coefficient vanishing mod q drops the degree: reject
  CHECK_THROWS_AS(certify(IntPolynomial{1, 1, 2}, cert), domain_error);
}

TEST_CASE("generated certificates are reproducible and honest") {
  for (CertificateKind kind :
       {CertificateKind::Eisenstein, CertificateKind::ShiftedEisenstein,
        CertificateKind::FiniteFieldIrreducible}) {
    CertifiedIrreducible a = generate_certified(4, kind, 31337);
    CertifiedIrreducible b = generate_certified(4, kind, 31337);
    CHECK(a.poly == b.poly);
    CHECK(a.degree == 4);
    // re-certification agrees (the predicate really holds)
    CHECK_NOTHROW(certify(a.poly, a.certificate));
  }
  CHECK_THROWS_AS(generate_certified(0, CertificateKind::Eisenstein, 1),
                  domain_error);
}

TEST_CASE("small soundness campaign has no violations") {
  CampaignSummary sum = soundness_campaign(25, 5, 424242);
  CHECK(sum.trials == 25);
  CHECK(sum.products_tested == 25);
  CHECK(sum.applicable > 0);
  CHECK(sum.passed());
  CHECK(sum.violations.empty());
  // deterministic for a fixed seed
  CampaignSummary again = soundness_campaign(25, 5, 424242);
  CHECK(again.applicable == sum.applicable);
  CHECK(again.inapplicable == sum.inapplicable);
}

TEST_CASE("partition verification on a known split") {
  // x^4+4 = (x^2+2x+2)(x^2-2x+2), both irreducible over Q
  IntPolynomial f = IntPolynomial{2, 2, 1} * IntPolynomial{2, -2, 1};
  CHECK(f == IntPolynomial({4, 0, 0, 0, 1}));
  std::vector<std::uint64_t> primes = small_primes(50);
  PartitionOutcome ok = partition_verify(f, 2, primes);
  CHECK(ok.verdict == Verdict::Verified);
  CHECK_FALSE(ok.partitions.empty());
  // d = 3 cannot be verified: the true partition {2,2} always survives
  PartitionOutcome no = partition_verify(f, 3, primes);
  CHECK(no.verdict == Verdict::Inconclusive);
}

TEST_CASE("partition verification agrees with the bound report") {
  IntPolynomial f{4, 0, 2, 0, 1};
  BoundReport rep = factor_degree_bound(f, Int(2), IntPolynomial::x());
  REQUIRE(rep.bound == 2);
  PartitionOutcome out = partition_verify(f, rep, small_primes(50));
  CHECK(out.verdict == Verdict::Verified);
}

TEST_CASE("partition verification is guarded") {
  CHECK_THROWS_AS(partition_verify(IntPolynomial{1, 2, 1}, 1, small_primes(20)),
                  domain_error);  // not squarefree
  CHECK_THROWS_AS(partition_verify(IntPolynomial::constant(Int(5)), 1,
                                   small_primes(20)),
                  domain_error);
  // degree-dropping and non-squarefree reductions are skipped, not used
  IntPolynomial f{3, 3, 2};
  PartitionOutcome out = partition_verify(f, 2, {2, 3, 5, 7});
  CHECK(std::find(out.skipped_primes.begin(), out.skipped_primes.end(), 2ull) !=
        out.skipped_primes.end());
  CHECK(out.verdict == Verdict::Verified);  // irreducible mod 7
  // empty usable set is inconclusive, not an error
  PartitionOutcome none = partition_verify(f, 2, {2, 3, 5});
  CHECK(none.verdict == Verdict::Inconclusive);
  CHECK(none.partitions.empty());
}

TEST_CASE("small prime scan") {
  std::vector<std::uint64_t> want = {2,  3,  5,  7,  11, 13, 17, 19,
                                     23, 29, 31, 37, 41, 43, 47};
  CHECK(small_primes(50) == want);
  CHECK(small_primes(1).empty());
}
