#include "phipoly/verification.hpp"

#include <algorithm>
#include <random>

#include "phipoly/error.hpp"
#include "phipoly/ff_polynomial.hpp"
#include "phipoly/parser.hpp"

namespace phipoly {

namespace {

bool eisenstein_at(const IntPolynomial& f, const Int& p) {
  int n = f.degree();
  if (n < 1) return false;
  if (f.coefficient(static_cast<std::size_t>(n)) % p == 0) return false;
  for (int i = 0; i < n; ++i) {
    if (f.coefficient(static_cast<std::size_t>(i)) % p != 0) return false;
  }
  return f.coefficient(0) % (p * p) != 0;
}

Int random_int(std::mt19937_64& rng, long lo, long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  return Int(dist(rng));
}

IntPolynomial random_eisenstein(int degree, const Int& p,
                                std::mt19937_64& rng) {
  std::vector<Int> c(static_cast<std::size_t>(degree) + 1);
  c[static_cast<std::size_t>(degree)] = 1;
  for (int i = 0; i < degree; ++i) {
    c[static_cast<std::size_t>(i)] = p * random_int(rng, -6, 6);
  }
  // Constant term p * u with p not dividing u.
  Int u = random_int(rng, 1, 6);
  if (u % p == 0) u += 1;
  if (rng() & 1) u = -u;
  c[0] = p * u;
  return IntPolynomial(std::move(c));
}

}  // namespace

std::string Certificate::describe() const {
  switch (kind) {
    case CertificateKind::Eisenstein:
      return "eisenstein(p=" + p.get_str() + ")";
    case CertificateKind::ShiftedEisenstein:
      return "shifted-eisenstein(p=" + p.get_str() + ", shift=" +
             shift.get_str() + ")";
    case CertificateKind::FiniteFieldIrreducible:
      return "ff-irreducible(q=" + p.get_str() + ")";
  }
  return "unknown";
}

CertifiedIrreducible certify(IntPolynomial poly, Certificate cert) {
  if (poly.degree() < 1) {
    throw domain_error("certificates require degree >= 1");
  }
  if (!is_prime(cert.p)) {
    throw domain_error("certificate prime " + cert.p.get_str() + " is not prime");
  }
  bool ok = false;
  switch (cert.kind) {
    case CertificateKind::Eisenstein:
      ok = eisenstein_at(poly, cert.p);
      break;
    case CertificateKind::ShiftedEisenstein:
      // f(x) = h(x + shift) means h(x) = f(x - shift).
      ok = eisenstein_at(poly.compose_shift(-cert.shift), cert.p);
      break;
    case CertificateKind::FiniteFieldIrreducible: {
      if (!cert.p.fits_ulong_p()) {
        throw domain_error("field modulus too large");
      }
      std::uint64_t q = mpz_get_ui(cert.p.get_mpz_t());
      FfPolynomial reduced = reduce_mod_p(poly, q);
      ok = reduced.degree() == poly.degree() && ff_irreducible(reduced);
      break;
    }
  }
  if (!ok) {
    throw domain_error("certificate predicate failed: " + cert.describe());
  }
  CertifiedIrreducible out;
  out.degree = poly.degree();
  out.poly = std::move(poly);
  out.certificate = std::move(cert);
  return out;
}

CertifiedIrreducible generate_certified(int degree, CertificateKind method,
                                        std::uint64_t seed) {
  if (degree < 1) throw domain_error("degree must be at least 1");
  static const long kPrimes[] = {2, 3, 5, 7, 11, 13};
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 4096; ++attempt) {
    Int p(kPrimes[rng() % (sizeof(kPrimes) / sizeof(kPrimes[0]))]);
    Certificate cert;
    cert.kind = method;
    cert.p = p;
    IntPolynomial cand;
    switch (method) {
      case CertificateKind::Eisenstein:
        cand = random_eisenstein(degree, p, rng);
        break;
      case CertificateKind::ShiftedEisenstein: {
        cert.shift = random_int(rng, -3, 3);
        cand = random_eisenstein(degree, p, rng).compose_shift(cert.shift);
        break;
      }
      case CertificateKind::FiniteFieldIrreducible: {
        std::uint64_t q = mpz_get_ui(p.get_mpz_t());
        std::vector<Int> c(static_cast<std::size_t>(degree) + 1);
        c[static_cast<std::size_t>(degree)] = 1;
        for (int i = 0; i < degree; ++i) {
          c[static_cast<std::size_t>(i)] = Int(rng() % q);
        }
        cand = IntPolynomial(std::move(c));
        break;
      }
    }
    try {
      return certify(std::move(cand), std::move(cert));
    } catch (const domain_error&) {
      continue;  // predicate missed; retry with fresh randomness
    }
  }
  throw internal_check_error("certified generation exhausted its retries");
}

CampaignSummary soundness_campaign(int count, int max_degree,
                                   std::uint64_t seed) {
  if (count < 1 || max_degree < 1) {
    throw domain_error("campaign needs count >= 1 and max-degree >= 1");
  }
  CampaignSummary sum;
  sum.seed = seed;
  sum.trials = count;

  std::vector<std::uint64_t> scan = small_primes(50);

  for (int t = 0; t < count; ++t) {
    // Per-trial generator, derived so trials are independent of each other.
    std::mt19937_64 trial_rng(seed + 0x9e3779b97f4a7c15ull * (t + 1));
    int parts = 1 + static_cast<int>(trial_rng() % 3);
    IntPolynomial f = IntPolynomial::constant(1);
    std::vector<int> degrees;
    std::vector<std::uint64_t> cert_primes;
    for (int i = 0; i < parts; ++i) {
      int deg = 1 + static_cast<int>(trial_rng() % max_degree);
      CertificateKind kind =
          static_cast<CertificateKind>(trial_rng() % 3);
      CertifiedIrreducible c = generate_certified(deg, kind, trial_rng());
      degrees.push_back(c.degree);
      cert_primes.push_back(mpz_get_ui(c.certificate.p.get_mpz_t()));
      f = f * c.poly;
    }
    sum.products_tested += 1;
    int max_true = *std::max_element(degrees.begin(), degrees.end());

    std::vector<std::uint64_t> primes = scan;
    primes.insert(primes.end(), cert_primes.begin(), cert_primes.end());
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());

    for (std::uint64_t q : primes) {
      BoundReport rep;
      try {
        rep = factor_degree_bound(f, Int(static_cast<unsigned long>(q)),
                                  IntPolynomial::x());
      } catch (const inapplicable_error&) {
        sum.inapplicable += 1;
        continue;
      }
      sum.applicable += 1;
      if (rep.bound > max_true) {
        CampaignViolation v;
        v.f = f;
        v.p = Int(static_cast<unsigned long>(q));
        v.bound = rep.bound;
        v.max_true_degree = max_true;
        v.factor_degrees = degrees;
        v.reproducer = "bound --poly \"" + poly_to_string(f) + "\" --prime " +
                       std::to_string(q);
        sum.violations.push_back(std::move(v));
      }
    }
  }
  return sum;
}

PartitionOutcome partition_verify(const IntPolynomial& f, int d,
                                  const std::vector<std::uint64_t>& primes) {
  if (f.degree() < 1) throw domain_error("partition check needs degree >= 1");
  if (d < 0) throw domain_error("negative degree bound");
  if (!is_squarefree_over_q(f)) {
    throw domain_error("partition check requires a squarefree polynomial");
  }
  PartitionOutcome out;
  int n = f.degree();
  for (std::uint64_t q : primes) {
    FfPolynomial reduced = reduce_mod_p(f, q);
    if (reduced.degree() != n) {
      out.skipped_primes.push_back(q);
      continue;
    }
    DegreePartition part = distinct_degree_factorization(reduced);
    if (!part.squarefree) {
      out.skipped_primes.push_back(q);
      continue;
    }
    out.partitions.push_back(std::move(part));
  }
  if (out.partitions.empty()) {
    out.verdict = Verdict::Inconclusive;
    out.reason = "no usable prime: every reduction dropped degree or was not squarefree";
    return out;
  }
  out.verdict = partition_consistency(n, d, out.partitions);
  out.reason = out.verdict == Verdict::Verified
                   ? "every compatible factor-degree partition has a part >= " +
                         std::to_string(d)
                   : "some compatible partition has all parts below " +
                         std::to_string(d);
  return out;
}

PartitionOutcome partition_verify(const IntPolynomial& f,
                                  const BoundReport& report,
                                  const std::vector<std::uint64_t>& primes) {
  return partition_verify(f, report.bound, primes);
}

std::vector<std::uint64_t> small_primes(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 2; n <= limit; ++n) {
    if (is_prime_u64(n)) out.push_back(n);
  }
  return out;
}

}  // namespace phipoly
