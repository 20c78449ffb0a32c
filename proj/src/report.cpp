#include "phipoly/report.hpp"

#include <algorithm>
#include <sstream>

#include "phipoly/error.hpp"

namespace phipoly {

namespace {

std::string val_str(const ExtendedValue& v) { return v.to_string(); }

// Exact decimal rendering of num/den to three places, for SVG coordinates.
std::string decimal3(const Rat& q) {
  Int scaled_num = q.get_num() * 1000;
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), scaled_num.get_mpz_t(), q.get_den().get_mpz_t());
  bool neg = r < 0;
  Int a = abs(r);
  std::string digits = a.get_str();
  while (digits.size() < 4) digits.insert(digits.begin(), '0');
  std::string out = digits.substr(0, digits.size() - 3) + "." +
                    digits.substr(digits.size() - 3);
  return neg ? "-" + out : out;
}

bool rank_one(const NewtonPolygon& poly) {
  for (const PolygonPoint& p : poly.points) {
    if (p.val.is_finite() && p.val.value().rank() != 1) return false;
  }
  return true;
}

}  // namespace

std::vector<std::string> hypothesis_notes(const BoundReport& rep) {
  std::vector<std::string> notes;
  notes.push_back("a_0 != 0 after stripping phi^" +
                  std::to_string(rep.stripped_phi_power) +
                  ", and v^x(a_0) > 0");
  notes.push_back("s = " + std::to_string(rep.s) +
                  " is the smallest index with v^x(a_s) = 0");
  notes.push_back("some a_i != 0 with i < s");
  notes.push_back(
      "every positive-slope edge [k_{j-1}, k_j] contributes d_j * m, where "
      "d_j is the least positive integer with d_j * slope_j in the value "
      "group");
  return notes;
}

Json report_to_json(const BoundReport& rep, const std::string& prime) {
  Json j;
  j["prime"] = prime;
  j["n"] = rep.n;
  j["m"] = rep.m;
  j["s"] = rep.s;
  j["stripped_phi_power"] = rep.stripped_phi_power;
  j["deg_analyzed"] = rep.deg_analyzed;

  Json points = Json::array();
  for (const PolygonPoint& p : rep.polygon.points) {
    points.push_back({{"i", p.i}, {"k", rep.polygon.n - p.i}, {"val", val_str(p.val)}});
  }
  j["points"] = std::move(points);

  Json vertices = Json::array();
  for (const PolygonPoint& p : rep.polygon.vertices) {
    vertices.push_back({{"i", p.i}, {"val", val_str(p.val)}});
  }
  j["vertices"] = std::move(vertices);

  Json edges = Json::array();
  for (const EdgeBound& e : rep.edges) {
    Json je;
    je["k_from"] = e.k_from;
    je["k_to"] = e.k_to;
    je["slope"] = e.slope.to_string();
    je["d"] = static_cast<long>(e.d.get_si());
    je["degree_bound"] = static_cast<long>(e.d.get_si()) * rep.m;
    edges.push_back(std::move(je));
  }
  j["edges"] = std::move(edges);

  j["bound"] = rep.bound;
  j["cofactor_bound"] = rep.cofactor;
  if (rep.legacy) {
    Json jl;
    jl["k"] = rep.legacy->k;
    jl["r_k"] = rep.legacy->r_k.get_str();
    jl["s"] = rep.legacy->s;
    jl["applicable"] = rep.legacy->applicable;
    if (rep.legacy->applicable) {
      jl["bound"] = rep.legacy->bound;
    } else {
      jl["bound"] = nullptr;
      jl["note"] = "coprimality fails, no conclusion";
    }
    j["legacy"] = std::move(jl);
  } else {
    j["legacy"] = nullptr;
  }
  j["hypotheses"] = hypothesis_notes(rep);
  return j;
}

std::string report_to_text(const BoundReport& rep, const std::string& prime) {
  std::ostringstream os;
  os << "prime               " << prime << "\n";
  os << "phi-degree n        " << rep.n << "\n";
  os << "deg phi m           " << rep.m << "\n";
  os << "stripped            phi^" << rep.stripped_phi_power << "\n";
  os << "s                   " << rep.s << "\n";
  os << "deg analyzed        " << rep.deg_analyzed << "\n";
  os << "vertices            ";
  for (std::size_t i = 0; i < rep.polygon.vertices.size(); ++i) {
    const PolygonPoint& p = rep.polygon.vertices[i];
    os << (i ? " " : "") << "(" << p.i << ", " << val_str(p.val) << ")";
  }
  os << "\n";
  for (std::size_t i = 0; i < rep.edges.size(); ++i) {
    const EdgeBound& e = rep.edges[i];
    os << "edge j=" << (i + 1) << "            k in [" << e.k_from << ", "
       << e.k_to << "], slope " << e.slope.to_string() << ", d = "
       << e.d.get_str() << ", degree bound " << (e.d.get_si() * rep.m) << "\n";
  }
  os << "bound               " << rep.bound << "\n";
  os << "cofactor bound      " << rep.cofactor << "\n";
  if (rep.legacy) {
    const LegacyRecord& l = *rep.legacy;
    os << "legacy              k = " << l.k << ", r_k = " << l.r_k.get_str()
       << ", s = " << l.s << ", ";
    if (l.applicable) {
      os << "bound " << l.bound << "\n";
    } else {
      os << "coprimality fails, no conclusion\n";
    }
  }
  os << "hypotheses checked\n";
  for (const std::string& h : hypothesis_notes(rep)) {
    os << "  - " << h << "\n";
  }
  return os.str();
}

std::string render_polygon_ascii(const NewtonPolygon& poly) {
  if (!rank_one(poly)) {
    std::ostringstream os;
    os << "(rank > 1 polygon: rendering skipped; slopes:";
    for (const PolygonEdge& e : poly.edges) os << " " << e.slope.to_string();
    os << ")\n";
    return os.str();
  }

  std::vector<std::pair<int, Rat>> finite;
  std::vector<int> infinite;
  for (const PolygonPoint& p : poly.points) {
    if (p.val.is_finite()) {
      finite.push_back({p.i, p.val.value()[0]});
    } else {
      infinite.push_back(p.i);
    }
  }
  if (finite.empty()) return "(no finite points)\n";

  Rat lo = finite.front().second, hi = finite.front().second;
  for (const auto& [i, v] : finite) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  int rows = hi == lo ? 1 : 9;

  // Exact row placement: round((v - lo)/(hi - lo) * (rows - 1)).
  auto row_of = [&](const Rat& v) -> int {
    if (rows == 1) return 0;
    Rat t = (v - lo) / (hi - lo) * Rat(rows - 1) + Rat(1, 2);
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), t.get_num().get_mpz_t(), t.get_den().get_mpz_t());
    return static_cast<int>(fl.get_si());
  };

  int cols = poly.n + 1;
  int colw = 4;
  std::vector<std::string> grid(static_cast<std::size_t>(rows),
                                std::string(static_cast<std::size_t>(cols * colw), ' '));
  std::vector<std::string> labels(static_cast<std::size_t>(rows));

  auto is_vertex = [&](int i) {
    for (const PolygonPoint& v : poly.vertices) {
      if (v.i == i) return true;
    }
    return false;
  };

  for (const auto& [i, v] : finite) {
    int r = row_of(v);
    std::size_t c = static_cast<std::size_t>(i * colw);
    grid[static_cast<std::size_t>(r)][c] = is_vertex(i) ? 'o' : '*';
    if (labels[static_cast<std::size_t>(r)].empty() && is_vertex(i)) {
      labels[static_cast<std::size_t>(r)] = rat_to_string(v);
    }
  }

  std::size_t label_width = 0;
  for (const std::string& l : labels) label_width = std::max(label_width, l.size());

  std::ostringstream os;
  for (int r = rows - 1; r >= 0; --r) {
    std::string l = labels[static_cast<std::size_t>(r)];
    os << std::string(label_width - l.size(), ' ') << l << " |"
       << grid[static_cast<std::size_t>(r)] << "\n";
  }
  os << std::string(label_width, ' ') << " +"
     << std::string(static_cast<std::size_t>(cols * colw), '-') << "\n";
  os << std::string(label_width + 2, ' ');
  for (int i = 0; i < cols; ++i) {
    std::string t = std::to_string(i);
    os << t << std::string(static_cast<std::size_t>(colw) - t.size(), ' ');
  }
  os << "\n";
  if (!infinite.empty()) {
    os << "zero coefficients (no point) at i =";
    for (int i : infinite) os << " " << i;
    os << "\n";
  }
  os << "edges:";
  for (const PolygonEdge& e : poly.edges) {
    os << " [" << e.from_index << " -> " << e.to_index << "] slope "
       << e.slope.to_string() << ";";
  }
  os << "\n";
  return os.str();
}

std::string render_polygon_svg(const NewtonPolygon& poly) {
  if (!rank_one(poly)) {
    throw domain_error("svg rendering supports rank-1 polygons only");
  }
  std::vector<std::pair<int, Rat>> finite;
  std::vector<int> infinite;
  for (const PolygonPoint& p : poly.points) {
    if (p.val.is_finite()) {
      finite.push_back({p.i, p.val.value()[0]});
    } else {
      infinite.push_back(p.i);
    }
  }
  if (finite.empty()) throw domain_error("svg rendering needs finite points");

  Rat lo = finite.front().second, hi = finite.front().second;
  for (const auto& [i, v] : finite) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  if (hi == lo) hi = lo + 1;

  const int margin = 40, cell = 60, plot_h = 300;
  int width = margin * 2 + cell * poly.n;
  int height = margin * 2 + plot_h;

  auto xc = [&](int i) { return std::to_string(margin + cell * i); };
  auto yc = [&](const Rat& v) {
    Rat t = (v - lo) / (hi - lo) * Rat(plot_h);
    return decimal3(Rat(margin + plot_h) - t);
  };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
     << width << "\" height=\"" << height << "\">\n";
  os << "  <rect width=\"" << width << "\" height=\"" << height
     << "\" fill=\"white\"/>\n";

  // Lower boundary.
  os << "  <polyline fill=\"none\" stroke=\"black\" stroke-width=\"2\" points=\"";
  for (std::size_t i = 0; i < poly.vertices.size(); ++i) {
    const PolygonPoint& p = poly.vertices[i];
    os << (i ? " " : "") << xc(p.i) << "," << yc(p.val.value()[0]);
  }
  os << "\"/>\n";

  auto is_vertex = [&](int i) {
    for (const PolygonPoint& v : poly.vertices) {
      if (v.i == i) return true;
    }
    return false;
  };

  for (const auto& [i, v] : finite) {
    os << "  <circle cx=\"" << xc(i) << "\" cy=\"" << yc(v) << "\" r=\"4\" fill=\""
       << (is_vertex(i) ? "black" : "gray") << "\"/>\n";
    os << "  <text x=\"" << xc(i) << "\" y=\"" << height - margin / 2
       << "\" font-size=\"12\" text-anchor=\"middle\">" << i << "</text>\n";
  }
  for (int i : infinite) {
    os << "  <text x=\"" << xc(i) << "\" y=\"" << margin / 2
       << "\" font-size=\"12\" text-anchor=\"middle\">inf</text>\n";
    os << "  <text x=\"" << xc(i) << "\" y=\"" << height - margin / 2
       << "\" font-size=\"12\" text-anchor=\"middle\">" << i << "</text>\n";
  }

  // Slope labels at edge midpoints.
  for (const PolygonEdge& e : poly.edges) {
    Rat from_v, to_v;
    for (const PolygonPoint& p : poly.vertices) {
      if (p.i == e.from_index) from_v = p.val.value()[0];
      if (p.i == e.to_index) to_v = p.val.value()[0];
    }
    Rat mid_x = make_rat(e.from_index + e.to_index, 2);
    Rat mid_y = (from_v + to_v) / 2;
    os << "  <text x=\"" << decimal3(Rat(margin) + mid_x * Rat(cell))
       << "\" y=\"" << yc(mid_y) << "\" font-size=\"14\" dy=\"-6\" "
          "text-anchor=\"middle\">" << e.slope.to_string() << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

Json diagnostics_to_json(const std::vector<EdgeIdentityVerdict>& verdicts) {
  Json arr = Json::array();
  for (const EdgeIdentityVerdict& v : verdicts) {
    Json j;
    j["edge"] = v.edge;
    j["k_from"] = v.k_from;
    j["k_to"] = v.k_to;
    j["lambda"] = v.lambda.to_string();
    j["w"] = v.w.to_string();
    j["min_index"] = v.indices.min_index;
    j["max_index"] = v.indices.max_index;
    j["endpoints_match"] = v.endpoints_match;
    j["w_agrees"] = v.w_agrees;
    j["lower_chords_steep"] = v.lower_chords_steep;
    j["upper_chords_flat"] = v.upper_chords_flat;
    j["ok"] = v.ok();
    arr.push_back(std::move(j));
  }
  return arr;
}

std::string diagnostics_to_text(const std::vector<EdgeIdentityVerdict>& verdicts) {
  std::ostringstream os;
  for (const EdgeIdentityVerdict& v : verdicts) {
    os << "edge " << v.edge << ": k in [" << v.k_from << ", " << v.k_to
       << "], lambda = " << v.lambda.to_string() << "\n";
    os << "  w = " << v.w.to_string() << ", attained on indices ["
       << v.indices.min_index << ", " << v.indices.max_index << "]\n";
    os << "  endpoints_match=" << (v.endpoints_match ? "yes" : "NO")
       << " w_agrees=" << (v.w_agrees ? "yes" : "NO")
       << " lower_chords_steep=" << (v.lower_chords_steep ? "yes" : "NO")
       << " upper_chords_flat=" << (v.upper_chords_flat ? "yes" : "NO")
       << " => " << (v.ok() ? "ok" : "FAILED") << "\n";
  }
  return os.str();
}

Json campaign_to_json(const CampaignSummary& sum) {
  Json j;
  j["seed"] = sum.seed;
  j["trials"] = sum.trials;
  j["products_tested"] = sum.products_tested;
  j["applicable"] = sum.applicable;
  j["inapplicable"] = sum.inapplicable;
  j["violations"] = Json::array();
  for (const CampaignViolation& v : sum.violations) {
    Json jv;
    jv["prime"] = v.p.get_str();
    jv["bound"] = v.bound;
    jv["max_true_degree"] = v.max_true_degree;
    jv["factor_degrees"] = v.factor_degrees;
    jv["reproducer"] = v.reproducer;
    j["violations"].push_back(std::move(jv));
  }
  j["passed"] = sum.passed();
  return j;
}

std::string campaign_to_text(const CampaignSummary& sum) {
  std::ostringstream os;
  os << "seed                " << sum.seed << "\n";
  os << "trials              " << sum.trials << "\n";
  os << "products tested     " << sum.products_tested << "\n";
  os << "applicable pairs    " << sum.applicable << "\n";
  os << "inapplicable pairs  " << sum.inapplicable << "\n";
  os << "violations          " << sum.violations.size() << "\n";
  for (const CampaignViolation& v : sum.violations) {
    os << "VIOLATION: bound " << v.bound << " > max true degree "
       << v.max_true_degree << " at p = " << v.p.get_str() << "\n";
    os << "  replay: " << v.reproducer << "\n";
  }
  os << (sum.passed() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

Json partition_to_json(const PartitionOutcome& out) {
  Json j;
  j["verdict"] = out.verdict == Verdict::Verified ? "verified" : "inconclusive";
  j["reason"] = out.reason;
  Json parts = Json::array();
  for (const DegreePartition& p : out.partitions) {
    parts.push_back({{"q", p.modulus}, {"degrees", p.degrees}});
  }
  j["partitions"] = std::move(parts);
  j["skipped_primes"] = out.skipped_primes;
  return j;
}

std::string partition_to_text(const PartitionOutcome& out) {
  std::ostringstream os;
  os << "verdict             "
     << (out.verdict == Verdict::Verified ? "verified" : "inconclusive") << "\n";
  os << "reason              " << out.reason << "\n";
  for (const DegreePartition& p : out.partitions) {
    os << "mod " << p.modulus << "            degrees {";
    for (std::size_t i = 0; i < p.degrees.size(); ++i) {
      os << (i ? "," : "") << p.degrees[i];
    }
    os << "}\n";
  }
  if (!out.skipped_primes.empty()) {
    os << "skipped primes     ";
    for (std::uint64_t q : out.skipped_primes) os << " " << q;
    os << "\n";
  }
  return os.str();
}

}  // namespace phipoly
