#include "phipoly/bound_engine.hpp"

#include <algorithm>

#include "phipoly/error.hpp"
#include "phipoly/ff_polynomial.hpp"
#include "phipoly/finite_field.hpp"

namespace phipoly {

namespace {

int to_int(const Int& v) {
  if (!v.fits_sint_p()) {
    throw internal_check_error("value does not fit in int");
  }
  return static_cast<int>(v.get_si());
}

// Shared tail of both entry points: vals[i] = v^x(a_i), already validated
// to start and end finite.
BoundReport run_pipeline(const std::vector<ExtendedValue>& vals,
                         const ValueGroup& group, int m) {
  BoundReport rep;
  rep.m = m;
  rep.n = static_cast<int>(vals.size()) - 1;

  int s = -1;
  for (int i = 0; i < static_cast<int>(vals.size()); ++i) {
    const ExtendedValue& v = vals[static_cast<std::size_t>(i)];
    if (v.is_finite() && !group.contains(v.value())) {
      throw domain_error("valuation at index " + std::to_string(i) +
                         " is not in the value group");
    }
    if (v.is_finite() && v.value().sign() < 0) {
      throw domain_error("valuation at index " + std::to_string(i) +
                         " is negative; coefficients must lie in the "
                         "valuation ring");
    }
    if (v.is_zero() && s < 0) s = i;
  }
  if (s < 0) {
    throw inapplicable_error(
        "no coefficient is a unit: every valuation is positive or infinite; "
        "strip content or choose a different prime");
  }
  if (s == 0) {
    throw inapplicable_error("bound inapplicable: the constant term is a unit");
  }
  bool lower_nonzero = false;
  for (int i = 0; i < s; ++i) {
    if (vals[static_cast<std::size_t>(i)].is_finite()) {
      lower_nonzero = true;
      break;
    }
  }
  if (!lower_nonzero) {
    throw inapplicable_error(
        "bound inapplicable: no nonzero coefficient below index s");
  }
  rep.s = s;

  std::vector<PolygonPoint> points;
  points.reserve(vals.size());
  for (int i = 0; i <= rep.n; ++i) {
    points.push_back({i, vals[static_cast<std::size_t>(rep.n - i)]});
  }
  rep.polygon = build_polygon(points);

  Int best = 0;
  for (const PositiveEdge& pe : positive_edges(rep.polygon, s)) {
    DenominatorWitness w = smallest_denominator(pe.slope, group);
    if (Int(pe.k_to - pe.k_from) % w.d != 0) {
      throw internal_check_error("edge denominator does not divide the width");
    }
    EdgeBound eb;
    eb.k_from = pe.k_from;
    eb.k_to = pe.k_to;
    eb.slope = pe.slope;
    eb.d = w.d;
    best = std::max(best, Int(w.d * m));
    rep.edges.push_back(std::move(eb));
  }
  if (rep.edges.empty()) {
    throw internal_check_error("positive region vanished after validation");
  }
  rep.bound = to_int(best);
  return rep;
}

}  // namespace

BoundReport factor_degree_bound(const IntPolynomial& f, const Int& p,
                                const IntPolynomial& phi) {
  if (f.is_zero()) throw domain_error("f must be nonzero");
  if (phi.degree() < 1 || !phi.is_monic()) {
    throw domain_error("phi must be monic of degree >= 1");
  }
  ValuationContext ctx(p);
  if (phi.degree() > 1) {
    // Monic degree-1 phi is irreducible mod every prime; only larger phi
    // needs the finite-field test (and hence a word-sized prime).
    if (!p.fits_ulong_p()) {
      throw domain_error("primes above 2^64 need phi of degree 1");
    }
    FfPolynomial phi_bar = reduce_mod_p(phi, mpz_get_ui(p.get_mpz_t()));
    if (!ff_irreducible(phi_bar)) {
      throw domain_error("phi is reducible modulo " + p.get_str());
    }
  }

  PhiExpansion expansion = phi_expansion(f, phi);
  int strip = 0;
  while (expansion.coefficients[static_cast<std::size_t>(strip)].is_zero()) {
    ++strip;
  }
  std::vector<IntPolynomial> coeffs(
      expansion.coefficients.begin() + strip, expansion.coefficients.end());

  std::vector<ExtendedValue> vals;
  vals.reserve(coeffs.size());
  for (const IntPolynomial& a : coeffs) vals.push_back(ctx.gauss(a));

  BoundReport rep = run_pipeline(vals, ctx.group(), phi.degree());
  rep.stripped_phi_power = strip;
  rep.deg_analyzed = f.degree() - strip * phi.degree();
  rep.cofactor = rep.deg_analyzed - rep.bound;
  if (rep.cofactor < 0) {
    throw internal_check_error("bound exceeds the degree");
  }
  if (phi.degree() == 1 && phi.coefficient(0) == 0) {
    try {
      rep.legacy = legacy_bound(f, p);
    } catch (const inapplicable_error&) {
      rep.legacy.reset();
    }
  }
  return rep;
}

BoundReport bound_from_valuations(const std::vector<ExtendedValue>& vals,
                                  const ValueGroup& group, int m) {
  if (m < 1) throw domain_error("phi-degree m must be at least 1");
  if (vals.size() < 2) {
    throw degenerate_input_error("need at least two valuations");
  }
  if (vals.front().is_infinite()) {
    throw domain_error("v(a_0) must be finite; strip phi factors first");
  }
  if (vals.back().is_infinite()) {
    throw domain_error("the leading valuation must be finite");
  }
  BoundReport rep = run_pipeline(vals, group, m);
  rep.deg_analyzed = rep.n * m;
  rep.cofactor = rep.deg_analyzed - rep.bound;
  return rep;
}

int cofactor_bound(const BoundReport& report, int deg_f) {
  if (deg_f < report.bound) {
    throw domain_error("degree is below the reported bound");
  }
  return deg_f - report.bound;
}

LegacyRecord legacy_bound(const IntPolynomial& f, const Int& p) {
  if (f.is_zero()) throw domain_error("f must be nonzero");
  ValuationContext ctx(p);
  int n = f.degree();

  int s = -1;
  for (int i = 0; i <= n; ++i) {
    ExtendedValue v = ctx.value_of(f.coefficient(i));
    if (v.is_zero()) {
      s = i;
      break;
    }
  }
  if (s < 0) {
    throw inapplicable_error("no coefficient is a unit modulo " + p.get_str());
  }
  bool lower_nonzero = false;
  for (int i = 0; i < s; ++i) {
    if (f.coefficient(i) != 0) {
      lower_nonzero = true;
      break;
    }
  }
  if (!lower_nonzero) {
    throw inapplicable_error(
        s == 0 ? "the constant term is a unit"
               : "no nonzero coefficient below index s");
  }

  // k = least index minimizing r_i/(s-i) over i < s, infinite entries skipped.
  int k = -1;
  Rat k_ratio;
  Int k_val;
  for (int i = 0; i < s; ++i) {
    const Int& c = f.coefficient(i);
    if (c == 0) continue;
    ExtendedValue v = ctx.value_of(c);
    Int r_i(v.value()[0].get_num());  // valuations of integers are integral
    Rat ratio = make_rat(r_i, Int(s - i));
    if (k < 0 || ratio < k_ratio) {
      k = i;
      k_ratio = ratio;
      k_val = r_i;
    }
  }

  LegacyRecord rec;
  rec.k = k;
  rec.r_k = k_val;
  rec.s = s;
  rec.applicable = int_gcd(k_val, Int(s - k)) == 1;
  rec.bound = rec.applicable ? s - k : 0;
  return rec;
}

int trinomial_bound(int n, int m, int s, int r) {
  if (m < 1 || n <= m) throw domain_error("need n > m >= 1");
  if (s < 0 || r < 0) throw domain_error("s and r must be nonnegative");
  Int lhs = Int(n - m) * Int(r);
  Int rhs = Int(n) * Int(s);
  if (!(lhs > rhs && rhs > 0)) {
    throw inapplicable_error("hypothesis (n-m)r > ns > 0 fails");
  }
  Int d1 = Int(m) / int_gcd(Int(m), Int(r - s));
  Int d2 = Int(n - m) / int_gcd(Int(n - m), Int(s));
  Int best = std::max(d1, d2);
  return static_cast<int>(best.get_si());
}

IntPolynomial realize_trinomial(int n, int m, int s, int r, const Int& p) {
  if (m < 1 || n <= m) throw domain_error("need n > m >= 1");
  Int a, b;
  mpz_pow_ui(a.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(s));
  mpz_pow_ui(b.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(r));
  IntPolynomial f = IntPolynomial::monomial(1, static_cast<unsigned>(n));
  f = f + IntPolynomial::monomial(a, static_cast<unsigned>(m));
  f = f + IntPolynomial::constant(b);
  return f;
}

}  // namespace phipoly
