#include "phipoly/proof_diagnostics.hpp"

#include "phipoly/error.hpp"
#include "phipoly/phi_expansion.hpp"

namespace phipoly {

namespace {

void validate(const SlopeValuation& sv) {
  if (sv.lambda.sign() <= 0) {
    throw domain_error("slope valuation needs a positive lambda");
  }
  for (const ExtendedValue& v : sv.expansion_vals) {
    if (v.is_finite()) {
      if (v.value().rank() != sv.lambda.rank()) {
        throw domain_error("slope valuation mixes value-group ranks");
      }
      return;
    }
  }
  throw domain_error("slope valuation needs at least one finite entry");
}

// v^x(a_i) + i * lambda, for finite entries only.
ValueVec term_at(const SlopeValuation& sv, int i) {
  return sv.expansion_vals[static_cast<std::size_t>(i)].value() +
         sv.lambda.scaled(Rat(i));
}

}  // namespace

ValueVec w_value(const SlopeValuation& sv) {
  validate(sv);
  bool have = false;
  ValueVec best;
  for (int i = 0; i < static_cast<int>(sv.expansion_vals.size()); ++i) {
    if (sv.expansion_vals[static_cast<std::size_t>(i)].is_infinite()) continue;
    ValueVec t = term_at(sv, i);
    if (!have || t < best) {
      best = std::move(t);
      have = true;
    }
  }
  return best;
}

IndexPair index_pair(const SlopeValuation& sv) {
  ValueVec w = w_value(sv);
  IndexPair out{-1, -1};
  for (int i = 0; i < static_cast<int>(sv.expansion_vals.size()); ++i) {
    if (sv.expansion_vals[static_cast<std::size_t>(i)].is_infinite()) continue;
    if (term_at(sv, i) == w) {
      if (out.min_index < 0) out.min_index = i;
      out.max_index = i;
    }
  }
  return out;
}

std::vector<ExtendedValue> expansion_vals_from(const BoundReport& report) {
  const std::vector<PolygonPoint>& pts = report.polygon.points;
  std::vector<ExtendedValue> vals;
  vals.reserve(pts.size());
  for (auto it = pts.rbegin(); it != pts.rend(); ++it) vals.push_back(it->val);
  return vals;
}

std::vector<EdgeIdentityVerdict> check_edge_identities(
    const BoundReport& report,
    const std::vector<ExtendedValue>& expansion_vals) {
  std::vector<EdgeIdentityVerdict> out;
  int n = static_cast<int>(expansion_vals.size()) - 1;
  for (std::size_t jj = 0; jj < report.edges.size(); ++jj) {
    const EdgeBound& e = report.edges[jj];
    EdgeIdentityVerdict v;
    v.edge = static_cast<int>(jj) + 1;
    v.k_from = e.k_from;
    v.k_to = e.k_to;
    v.lambda = e.slope;

    SlopeValuation sv{e.slope, expansion_vals};
    v.w = w_value(sv);
    v.indices = index_pair(sv);
    v.endpoints_match =
        v.indices.min_index == e.k_from && v.indices.max_index == e.k_to;

    const ExtendedValue& at_from = expansion_vals[static_cast<std::size_t>(e.k_from)];
    const ExtendedValue& at_to = expansion_vals[static_cast<std::size_t>(e.k_to)];
    v.w_agrees = at_from.is_finite() && at_to.is_finite() &&
                 v.w == at_from.value() + e.slope.scaled(Rat(e.k_from)) &&
                 v.w == at_to.value() + e.slope.scaled(Rat(e.k_to));

    if (at_to.is_finite()) {
      bool all_steep = true;
      int first_equal = -1;
      for (int i = 0; i < e.k_to; ++i) {
        const ExtendedValue& vi = expansion_vals[static_cast<std::size_t>(i)];
        if (vi.is_infinite()) continue;
        ValueVec chord =
            (vi.value() - at_to.value()).scaled(make_rat(1, e.k_to - i));
        int c = cmp(chord, e.slope);
        if (c < 0) all_steep = false;
        if (c == 0 && first_equal < 0) first_equal = i;
      }
      v.lower_chords_steep = all_steep && first_equal == e.k_from;
    }

    if (at_from.is_finite()) {
      bool ok = true;
      for (int i = e.k_to; i <= n; ++i) {
        const ExtendedValue& vi = expansion_vals[static_cast<std::size_t>(i)];
        if (vi.is_infinite()) continue;
        ValueVec chord =
            (at_from.value() - vi.value()).scaled(make_rat(1, i - e.k_from));
        int c = cmp(chord, e.slope);
        // Equality exactly at the upper endpoint, strict inequality past it.
        if (i == e.k_to ? c != 0 : c >= 0) {
          ok = false;
          break;
        }
      }
      v.upper_chords_flat = ok;
    }
    out.push_back(std::move(v));
  }
  return out;
}

void require_edge_identities(const BoundReport& report,
                             const std::vector<ExtendedValue>& expansion_vals) {
  for (const EdgeIdentityVerdict& v : check_edge_identities(report, expansion_vals)) {
    if (!v.ok()) {
      throw internal_check_error("edge identity check failed on edge " +
                                 std::to_string(v.edge));
    }
  }
}

AdditivityVerdict additivity_check(const IntPolynomial& f,
                                   const IntPolynomial& g,
                                   const IntPolynomial& phi, const Int& p,
                                   const ValueVec& lambda) {
  ValuationContext ctx(p);
  auto vals_of = [&](const IntPolynomial& h) {
    PhiExpansion e = phi_expansion(h, phi);
    return expansion_valuations(e, ctx);
  };
  AdditivityVerdict out;
  out.left = index_pair({lambda, vals_of(f)});
  out.right = index_pair({lambda, vals_of(g)});
  out.product = index_pair({lambda, vals_of(f * g)});
  out.additive =
      out.product.min_index == out.left.min_index + out.right.min_index &&
      out.product.max_index == out.left.max_index + out.right.max_index;
  return out;
}

}  // namespace phipoly
