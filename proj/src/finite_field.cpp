#include "phipoly/finite_field.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "phipoly/error.hpp"

namespace phipoly {

namespace {

bool miller_rabin_u64(std::uint64_t n, std::uint64_t a) {
  if (a % n == 0) return true;
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  std::uint64_t x = powmod_u64(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mulmod_u64(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

std::vector<int> prime_divisors(int n) {
  std::vector<int> out;
  for (int t = 2; t * t <= n; ++t) {
    if (n % t == 0) {
      out.push_back(t);
      while (n % t == 0) n /= t;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// x^(q^k) mod g for k = 1..upto, by iterated q-th powers.
std::vector<FfPolynomial> frobenius_powers(const FfPolynomial& g, int upto) {
  std::uint64_t q = g.modulus();
  std::vector<FfPolynomial> pw;
  pw.reserve(static_cast<std::size_t>(upto));
  FfPolynomial cur = ff_rem(FfPolynomial::x(q), g);
  for (int k = 1; k <= upto; ++k) {
    cur = ff_powmod(cur, q, g);
    pw.push_back(cur);
  }
  return pw;
}

FfPolynomial ff_powmod_big(const FfPolynomial& base, const Int& e,
                           const FfPolynomial& m) {
  if (e < 0) throw domain_error("ff_powmod_big: negative exponent");
  std::uint64_t q = base.modulus();
  FfPolynomial acc = ff_rem(FfPolynomial::constant(q, 1), m);
  FfPolynomial cur = ff_rem(base, m);
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (e == 0) return acc;
  for (std::size_t i = 0; i < bits; ++i) {
    if (mpz_tstbit(e.get_mpz_t(), i)) acc = ff_rem(acc * cur, m);
    if (i + 1 < bits) cur = ff_rem(cur * cur, m);
  }
  return acc;
}

FfPolynomial random_poly_below(int deg_bound, std::uint64_t q,
                               std::mt19937_64& rng) {
  std::vector<std::uint64_t> c(static_cast<std::size_t>(deg_bound));
  for (std::uint64_t& v : c) v = rng() % q;
  return FfPolynomial(q, std::move(c));
}

void edf_recurse(const FfPolynomial& g, int d, std::mt19937_64& rng,
                 std::vector<FfPolynomial>& out) {
  std::uint64_t q = g.modulus();
  if (g.degree() == d) {
    out.push_back(g.monic());
    return;
  }
  Int half_order;
  if (q != 2) {
    Int qd;
    mpz_ui_pow_ui(qd.get_mpz_t(), q, static_cast<unsigned long>(d));
    half_order = (qd - 1) / 2;
  }
  for (int attempt = 0; attempt < 128; ++attempt) {
    FfPolynomial a = random_poly_below(g.degree(), q, rng);
    if (a.is_zero()) continue;
    FfPolynomial b(q);
    if (q == 2) {
      // Trace map over F_2: a + a^2 + ... + a^(2^(d-1)).
      FfPolynomial t = ff_rem(a, g);
      b = t;
      for (int i = 1; i < d; ++i) {
        t = ff_rem(t * t, g);
        b = b + t;
      }
    } else {
      FfPolynomial pw = ff_powmod_big(a, half_order, g);
      b = pw - ff_rem(FfPolynomial::constant(q, 1), g);
    }
    FfPolynomial cand = ff_gcd(b, g);
    if (cand.degree() > 0 && cand.degree() < g.degree()) {
      FfPolynomial quotient(q), rem(q);
      ff_divmod(g, cand, quotient, rem);
      if (!rem.is_zero()) {
        throw internal_check_error("equal-degree split produced a non-divisor");
      }
      edf_recurse(cand, d, rng, out);
      edf_recurse(quotient.monic(), d, rng, out);
      return;
    }
  }
  throw internal_check_error("equal-degree splitting failed to converge");
}

// Can the multiset q_parts be merged into exactly the multiset cand?
bool coarsens(const std::vector<int>& cand, std::vector<int> q_parts) {
  std::sort(q_parts.begin(), q_parts.end(), std::greater<int>());
  std::vector<int> caps(cand);
  // Assign the largest remaining piece first; identical capacities are
  // interchangeable, so each distinct value is tried once.
  struct Rec {
    static bool go(std::vector<int>& caps, const std::vector<int>& items,
                   std::size_t idx) {
      if (idx == items.size()) return true;
      int piece = items[idx];
      std::set<int> tried;
      for (int& cap : caps) {
        if (cap < piece || tried.count(cap) != 0) continue;
        tried.insert(cap);
        cap -= piece;
        if (go(caps, items, idx + 1)) {
          cap += piece;
          return true;
        }
        cap += piece;
      }
      return false;
    }
  };
  return Rec::go(caps, q_parts, 0);
}

void enumerate_partitions(int n, int max_part, std::vector<int>& cur,
                          std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int part = std::min(n, max_part); part >= 1; --part) {
    cur.push_back(part);
    enumerate_partitions(n - part, part, cur, out);
    cur.pop_back();
  }
}

}  // namespace

bool is_prime_u64(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t small : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                              19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (p == small) return true;
    if (p % small == 0) return false;
  }
  // This witness set is deterministic for all 64-bit integers.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (!miller_rabin_u64(p, a)) return false;
  }
  return true;
}

bool is_prime(const Int& p) {
  if (p < 2) return false;
  if (mpz_fits_ulong_p(p.get_mpz_t())) {
    return is_prime_u64(mpz_get_ui(p.get_mpz_t()));
  }
  return mpz_probab_prime_p(p.get_mpz_t(), 40) != 0;
}

bool ff_irreducible(const FfPolynomial& g) {
  if (g.is_zero()) throw domain_error("ff_irreducible: zero polynomial");
  if (!is_prime_u64(g.modulus())) {
    throw domain_error("ff_irreducible: modulus must be prime");
  }
  int n = g.degree();
  if (n < 1) return false;
  if (n == 1) return true;
  FfPolynomial m = g.monic();
  std::uint64_t q = m.modulus();
  FfPolynomial x = ff_rem(FfPolynomial::x(q), m);
  std::vector<FfPolynomial> pw = frobenius_powers(m, n);
  if (pw[static_cast<std::size_t>(n - 1)] != x) return false;
  for (int t : prime_divisors(n)) {
    const FfPolynomial& h = pw[static_cast<std::size_t>(n / t - 1)];
    FfPolynomial g1 = ff_gcd(h - x, m);
    if (g1.degree() != 0) return false;
  }
  return true;
}

int DegreePartition::total() const {
  return std::accumulate(degrees.begin(), degrees.end(), 0);
}

DegreePartition distinct_degree_factorization(const FfPolynomial& g) {
  if (g.is_zero()) {
    throw domain_error("distinct_degree_factorization: zero polynomial");
  }
  if (!is_prime_u64(g.modulus())) {
    throw domain_error("distinct_degree_factorization: modulus must be prime");
  }
  DegreePartition part;
  part.modulus = g.modulus();
  FfPolynomial m = g.monic();
  if (m.degree() == 0) {
    part.squarefree = true;
    return part;
  }
  if (ff_gcd(m, m.derivative()).degree() != 0) {
    part.squarefree = false;
    return part;
  }
  part.squarefree = true;
  std::uint64_t q = m.modulus();
  FfPolynomial rem = m;
  FfPolynomial h = ff_rem(FfPolynomial::x(q), rem);
  int d = 0;
  while (rem.degree() > 0 && rem.degree() >= 2 * (d + 1)) {
    ++d;
    h = ff_powmod(h, q, rem);
    FfPolynomial x = ff_rem(FfPolynomial::x(q), rem);
    FfPolynomial stage = ff_gcd(h - x, rem);
    if (stage.degree() > 0) {
      for (int i = 0; i < stage.degree() / d; ++i) part.degrees.push_back(d);
      FfPolynomial quotient(q), r(q);
      ff_divmod(rem, stage, quotient, r);
      if (!r.is_zero()) {
        throw internal_check_error("distinct-degree stage is not a divisor");
      }
      rem = quotient.monic();
      h = ff_rem(h, rem);
    }
  }
  if (rem.degree() > 0) part.degrees.push_back(rem.degree());
  std::sort(part.degrees.begin(), part.degrees.end());
  return part;
}

std::vector<FfPolynomial> equal_degree_factorization(const FfPolynomial& g,
                                                     int d,
                                                     std::mt19937_64& rng) {
  if (g.is_zero() || d < 1 || g.degree() % d != 0) {
    throw domain_error("equal_degree_factorization: bad input");
  }
  std::vector<FfPolynomial> out;
  if (g.degree() == 0) return out;
  edf_recurse(g.monic(), d, rng, out);
  return out;
}

std::vector<FfPolynomial> ff_factor_squarefree(const FfPolynomial& g,
                                               std::uint64_t seed) {
  if (g.is_zero()) throw domain_error("ff_factor_squarefree: zero polynomial");
  FfPolynomial m = g.monic();
  if (m.degree() > 0 && ff_gcd(m, m.derivative()).degree() != 0) {
    throw domain_error("ff_factor_squarefree: input is not squarefree");
  }
  std::mt19937_64 rng(seed);
  std::uint64_t q = m.modulus();
  std::vector<FfPolynomial> out;
  FfPolynomial rem = m;
  FfPolynomial h = ff_rem(FfPolynomial::x(q), rem);
  int d = 0;
  while (rem.degree() > 0 && rem.degree() >= 2 * (d + 1)) {
    ++d;
    h = ff_powmod(h, q, rem);
    FfPolynomial x = ff_rem(FfPolynomial::x(q), rem);
    FfPolynomial stage = ff_gcd(h - x, rem);
    if (stage.degree() > 0) {
      for (FfPolynomial& f : equal_degree_factorization(stage, d, rng)) {
        out.push_back(std::move(f));
      }
      FfPolynomial quotient(q), r(q);
      ff_divmod(rem, stage, quotient, r);
      rem = quotient.monic();
      h = ff_rem(h, rem);
    }
  }
  if (rem.degree() > 0) out.push_back(rem);
  std::sort(out.begin(), out.end(), [](const FfPolynomial& a, const FfPolynomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.coefficients() < b.coefficients();
  });
  return out;
}

std::vector<std::vector<int>> consistent_partitions(
    int n, const std::vector<DegreePartition>& parts) {
  if (n < 1 || n > 64) {
    throw domain_error("partition check supports degrees 1 through 64");
  }
  std::vector<const DegreePartition*> usable;
  for (const DegreePartition& p : parts) {
    if (!p.squarefree) continue;
    if (p.total() != n) {
      throw domain_error("degree partition does not sum to the degree");
    }
    usable.push_back(&p);
  }
  std::vector<std::vector<int>> all;
  std::vector<int> cur;
  enumerate_partitions(n, n, cur, all);
  std::vector<std::vector<int>> out;
  for (const std::vector<int>& cand : all) {
    bool ok = true;
    for (const DegreePartition* p : usable) {
      if (!coarsens(cand, p->degrees)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(cand);
  }
  return out;
}

Verdict partition_consistency(int n, int d,
                              const std::vector<DegreePartition>& parts) {
  std::vector<std::vector<int>> cands = consistent_partitions(n, parts);
  if (cands.empty()) {
    throw domain_error("degree partitions admit no common coarsening");
  }
  for (const std::vector<int>& cand : cands) {
    int maxp = *std::max_element(cand.begin(), cand.end());
    if (maxp < d) return Verdict::Inconclusive;
  }
  return Verdict::Verified;
}

}  // namespace phipoly
