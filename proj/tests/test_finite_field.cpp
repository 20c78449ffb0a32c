#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "doctest.h"
#include "phipoly/error.hpp"
#include "phipoly/finite_field.hpp"

using namespace phipoly;

namespace {

// All monic polynomials of exact degree d over F_q, by base-q counting.
std::vector<FfPolynomial> all_monic(std::uint64_t q, int d) {
  std::vector<FfPolynomial> out;
  std::uint64_t total = 1;
  for (int i = 0; i < d; ++i) total *= q;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<std::uint64_t> coeffs(static_cast<std::size_t>(d) + 1, 0);
    std::uint64_t c = code;
    for (int i = 0; i < d; ++i) {
      coeffs[static_cast<std::size_t>(i)] = c % q;
      c /= q;
    }
    coeffs.back() = 1;
    out.emplace_back(q, std::move(coeffs));
  }
  return out;
}

// Divisor-scan oracle: irreducible iff no monic divisor of degree in
// [1, d/2]. Completely independent of the Rabin route.
bool irreducible_by_scan(const FfPolynomial& g) {
  int d = g.degree();
  if (d < 1) return false;
  for (int e = 1; 2 * e <= d; ++e) {
    for (const FfPolynomial& h : all_monic(g.modulus(), e)) {
      if (ff_rem(g, h).is_zero()) return false;
    }
  }
  return true;
}

// Trial-division factorization oracle, smallest divisors first.
std::vector<int> factor_degrees_by_scan(FfPolynomial g) {
  std::vector<int> degrees;
  g = g.monic();
  int e = 1;
  while (g.degree() > 0) {
    bool split = false;
    for (const FfPolynomial& h : all_monic(g.modulus(), e)) {
      if (g.degree() >= e && ff_rem(g, h).is_zero()) {
        FfPolynomial q(g.modulus()), r(g.modulus());
        ff_divmod(g, h, q, r);
        g = q;
        degrees.push_back(e);
        split = true;
        break;
      }
    }
    if (!split) ++e;
  }
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

FfPolynomial random_monic(std::mt19937_64& rng, std::uint64_t q, int d) {
  std::vector<std::uint64_t> coeffs(static_cast<std::size_t>(d) + 1);
  for (int i = 0; i < d; ++i) coeffs[static_cast<std::size_t>(i)] = rng() % q;
  coeffs.back() = 1;
  return FfPolynomial(q, std::move(coeffs));
}

}  // namespace

TEST_CASE("word-sized modular arithmetic") {
  std::uint64_t q = 0xffffffffffffffc5ull;  // largest prime below 2^64
  CHECK(mulmod_u64(q - 1, q - 1, q) == 1);  // (-1)^2
  CHECK(powmod_u64(2, 0, q) == 1);
  for (std::uint64_t a : {2ull, 3ull, 12345678901234567ull}) {
    CHECK(mulmod_u64(a, invmod_u64(a, q), q) == 1);
    CHECK(powmod_u64(a, q - 1, q) == 1);  // Fermat
  }
}

TEST_CASE("primality: sieve agreement and classic strong pseudoprimes") {
  // sieve oracle below 2000
  std::vector<bool> is_comp(2000, false);
  for (std::size_t i = 2; i < 2000; ++i) {
    if (is_comp[i]) continue;
    for (std::size_t j = i * i; j < 2000; j += i) is_comp[j] = true;
  }
  for (std::uint64_t n = 0; n < 2000; ++n) {
    CHECK(is_prime_u64(n) == (n >= 2 && !is_comp[static_cast<std::size_t>(n)]));
  }
  // Carmichael and strong-pseudoprime trouble spots
  for (std::uint64_t n : {561ull, 1105ull, 41041ull, 3215031751ull,
                          3825123056546413051ull}) {
    CHECK_FALSE(is_prime_u64(n));
  }
  CHECK(is_prime_u64(18446744073709551557ull));
  CHECK(is_prime(Int("170141183460469231731687303715884105727")));  // 2^127-1
  CHECK_FALSE(is_prime(Int("170141183460469231731687303715884105725")));
}

TEST_CASE("ff polynomial arithmetic basics") {
  FfPolynomial a(5, {1, 2, 3});  // 3x^2+2x+1 over F_5
  FfPolynomial b(5, {4, 1});     // x+4
  CHECK((a * b).degree() == 3);
  CHECK((a + b - b) == a);
  CHECK(a.eval(2) == (3 * 4 + 2 * 2 + 1) % 5);
  FfPolynomial q(5), r(5);
  ff_divmod(a, b, q, r);
  CHECK(q * b + r == a);
  CHECK(r.degree() < b.degree());
  CHECK(ff_gcd(a * b, b) == b.monic());
  CHECK_THROWS_AS(a + FfPolynomial(7, {1}), domain_error);
}

TEST_CASE("reduction mod p lands in canonical representatives") {
  FfPolynomial r = reduce_mod_p(IntPolynomial{-1, 7, -10, 3}, 5);
  CHECK(r.coefficient(0) == 4);
  CHECK(r.coefficient(1) == 2);
  CHECK(r.coefficient(2) == 0);
  CHECK(r.coefficient(3) == 3);
  CHECK(reduce_mod_p(IntPolynomial{5, 10}, 5).is_zero());
}

TEST_CASE("irreducibility agrees with the divisor scan, exhaustively") {
  for (std::uint64_t q : {2ull, 3ull}) {
    int dmax = q == 2 ? 6 : 5;
    for (int d = 1; d <= dmax; ++d) {
      for (const FfPolynomial& g : all_monic(q, d)) {
        CHECK(ff_irreducible(g) == irreducible_by_scan(g));
      }
    }
  }
  for (int d = 1; d <= 3; ++d) {
    for (const FfPolynomial& g : all_monic(5, d)) {
      CHECK(ff_irreducible(g) == irreducible_by_scan(g));
    }
  }
}

TEST_CASE("irreducible counts match the necklace formula") {
  // number of monic irreducibles of degree d over F_q:
  // d=2: (q^2-q)/2, d=3: (q^3-q)/3, d=4: (q^4-q^2)/4
  for (std::uint64_t q : {2ull, 3ull, 5ull}) {
    long n2 = 0, n3 = 0;
    for (const FfPolynomial& g : all_monic(q, 2)) n2 += ff_irreducible(g);
    for (const FfPolynomial& g : all_monic(q, 3)) n3 += ff_irreducible(g);
    CHECK(n2 == static_cast<long>(q * q - q) / 2);
    CHECK(n3 == static_cast<long>(q * q * q - q) / 3);
  }
  // and the degree-4 count over F_2: (16 - 4)/4 = 3
  long n4 = 0;
  for (const FfPolynomial& g : all_monic(2, 4)) n4 += ff_irreducible(g);
  CHECK(n4 == 3);
}

TEST_CASE("distinct-degree factorization against trial division") {
  std::mt19937_64 rng(424242);
  int done = 0;
  while (done < 250) {
    std::uint64_t q = std::vector<std::uint64_t>{2, 3, 5, 7}[rng() % 4];
    int d = 1 + static_cast<int>(rng() % 8);
    FfPolynomial g = random_monic(rng, q, d);
    DegreePartition part = distinct_degree_factorization(g);
    std::vector<int> oracle = factor_degrees_by_scan(g);
    bool squarefree_oracle = ff_gcd(g, g.derivative()).degree() == 0;
    CHECK(part.squarefree == squarefree_oracle);
    if (!part.squarefree) continue;
    CHECK(part.degrees == oracle);
    CHECK(part.total() == d);
    ++done;
  }
}

TEST_CASE("equal-degree splitting recovers known irreducibles") {
  std::mt19937_64 rng(7);
  struct Case { std::uint64_t q; int d; int count; };
  for (Case c : {Case{2, 3, 2}, Case{3, 2, 3}, Case{5, 2, 4}, Case{7, 1, 5},
                 Case{2, 4, 3}}) {
    // multiply `count` distinct irreducibles of degree d, then split
    std::vector<FfPolynomial> picked;
    for (const FfPolynomial& g : all_monic(c.q, c.d)) {
      if (static_cast<int>(picked.size()) == c.count) break;
      if (ff_irreducible(g)) picked.push_back(g);
    }
    REQUIRE(static_cast<int>(picked.size()) == c.count);
    FfPolynomial prod = FfPolynomial::constant(c.q, 1);
    for (const FfPolynomial& g : picked) prod = prod * g;
    std::vector<FfPolynomial> split = equal_degree_factorization(prod, c.d, rng);
    REQUIRE(split.size() == picked.size());
    auto key = [](const FfPolynomial& a, const FfPolynomial& b) {
      return a.coefficients() < b.coefficients();
    };
    std::sort(split.begin(), split.end(), key);
    std::sort(picked.begin(), picked.end(), key);
    for (std::size_t i = 0; i < split.size(); ++i) CHECK(split[i] == picked[i]);
  }
}

TEST_CASE("full squarefree factorization round-trips") {
  std::mt19937_64 rng(5150);
  int done = 0;
  while (done < 120) {
    std::uint64_t q = std::vector<std::uint64_t>{2, 3, 5, 13}[rng() % 4];
    int d = 2 + static_cast<int>(rng() % 7);
    FfPolynomial g = random_monic(rng, q, d);
    if (ff_gcd(g, g.derivative()).degree() != 0) continue;
    std::vector<FfPolynomial> factors = ff_factor_squarefree(g, 99 + done);
    FfPolynomial prod = FfPolynomial::constant(q, 1);
    for (const FfPolynomial& h : factors) {
      CHECK(ff_irreducible(h));
      prod = prod * h;
    }
    CHECK(prod == g.monic());
    ++done;
  }
}

TEST_CASE("consistent partitions: worked examples") {
  // n = 4, one reduction says {2, 2}: survivors are {2,2} and {4}
  DegreePartition p22{7, {2, 2}, true};
  std::vector<std::vector<int>> got = consistent_partitions(4, {p22});
  REQUIRE(got.size() == 2);
  CHECK(std::find(got.begin(), got.end(), std::vector<int>{2, 2}) != got.end());
  CHECK(std::find(got.begin(), got.end(), std::vector<int>{4}) != got.end());
  CHECK(partition_consistency(4, 2, {p22}) == Verdict::Verified);

  // an irreducible reduction pins the whole thing
  DegreePartition p5{3, {5}, true};
  CHECK(consistent_partitions(5, {p5}) == std::vector<std::vector<int>>{{5}});
  CHECK(partition_consistency(5, 4, {p5}) == Verdict::Verified);

  // fully split reduction leaves every partition alive; d = 3 cannot be
  // concluded since {1,1,1,1} survives
  DegreePartition p1111{5, {1, 1, 1, 1}, true};
  CHECK(partition_consistency(4, 3, {p1111}) == Verdict::Inconclusive);

  // two incompatible reductions leave only the trivial coarsening {n}
  DegreePartition p31{11, {1, 3}, true};
  CHECK(consistent_partitions(4, {p22, p31}) ==
        std::vector<std::vector<int>>{{4}});

  // a partition that does not sum to the degree is a caller bug
  CHECK_THROWS_AS(consistent_partitions(5, {p22}), domain_error);
  // non-squarefree records are skipped, not used
  DegreePartition bad{2, {}, false};
  CHECK(partition_consistency(4, 2, {p22, bad}) == Verdict::Verified);
}

TEST_CASE("partition coarsening respects multiset merges") {
  // {2,1,1} can merge into {2,2}, {3,1}, {4}, or stay put
  DegreePartition p112{3, {1, 1, 2}, true};
  std::vector<std::vector<int>> got = consistent_partitions(4, {p112});
  std::vector<std::vector<int>> want = {{2, 1, 1}, {3, 1}, {2, 2}, {4}};
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  CHECK(got == want);
}
