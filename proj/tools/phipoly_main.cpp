#include <atomic>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "phipoly/bound_engine.hpp"
#include "phipoly/error.hpp"
#include "phipoly/parser.hpp"
#include "phipoly/proof_diagnostics.hpp"
#include "phipoly/report.hpp"
#include "phipoly/verification.hpp"
#include "phipoly/version.hpp"

namespace {

using phipoly::Int;
using phipoly::IntPolynomial;
using phipoly::Json;

struct BoundOptions {
  std::string poly_text;
  std::string coeffs_text;
  std::string vals_text;
  std::vector<std::string> primes;
  std::string phi_text = "x";
  std::string group_text = "z";
  int nominal_m = 1;
  bool json = false;
  bool ascii = false;
  std::string svg_path;
  std::string batch_path;
  int jobs = 0;
};

Json document_shell(const std::string& command) {
  Json doc;
  doc["tool"] = phipoly::kToolName;
  doc["version"] = phipoly::kVersion;
  doc["command"] = command;
  return doc;
}

IntPolynomial polynomial_input(const std::string& poly_text,
                               const std::string& coeffs_text) {
  if (!poly_text.empty() && !coeffs_text.empty()) {
    throw phipoly::domain_error("give either --poly or --coeffs, not both");
  }
  if (!poly_text.empty()) return phipoly::parse_polynomial(poly_text);
  if (!coeffs_text.empty()) return phipoly::parse_coefficient_list(coeffs_text);
  throw phipoly::domain_error("missing input: use --poly or --coeffs");
}

Int parse_prime(const std::string& text) {
  Int p;
  try {
    p = Int(text);
  } catch (const std::invalid_argument&) {
    throw phipoly::domain_error("bad prime '" + text + "'");
  }
  if (!phipoly::is_prime(p)) {
    throw phipoly::domain_error("'" + text + "' is not prime");
  }
  return p;
}

// One polynomial against one prime; returns a JSON report entry and
// appends the human form to text_out.
Json bound_one_prime(const IntPolynomial& f, const std::string& prime_text,
                     const IntPolynomial& phi, bool ascii,
                     std::string& text_out,
                     std::optional<phipoly::BoundReport>& out_report) {
  Json entry;
  try {
    Int p = parse_prime(prime_text);
    phipoly::BoundReport rep = phipoly::factor_degree_bound(f, p, phi);
    entry = phipoly::report_to_json(rep, prime_text);
    entry["status"] = "ok";
    text_out += "== prime " + prime_text + "\n";
    text_out += phipoly::report_to_text(rep, prime_text);
    if (ascii) text_out += phipoly::render_polygon_ascii(rep.polygon);
    text_out += "\n";
    out_report = std::move(rep);
  } catch (const phipoly::inapplicable_error& e) {
    entry["prime"] = prime_text;
    entry["status"] = "inapplicable";
    entry["reason"] = e.what();
    text_out += "== prime " + prime_text + "\ninapplicable: " +
                std::string(e.what()) + "\n\n";
  }
  return entry;
}

int emit_bound_result(const BoundOptions& opt, const Json& doc,
                      const std::string& text, int successes,
                      int inapplicable) {
  if (opt.json) {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << text;
  }
  if (successes > 0) return 0;
  return inapplicable > 0 ? 1 : 2;
}

int run_bound_single(const BoundOptions& opt) {
  Json doc = document_shell("bound");
  std::string text;
  int successes = 0;

  if (!opt.vals_text.empty()) {
    phipoly::ValueGroup group = phipoly::parse_group(opt.group_text);
    std::vector<phipoly::ExtendedValue> vals =
        phipoly::parse_valuation_list(opt.vals_text, group.rank());
    doc["input"] = {{"mode", "valuations"},
                    {"vals", opt.vals_text},
                    {"group", group.name()},
                    {"m", opt.nominal_m}};
    phipoly::BoundReport rep =
        phipoly::bound_from_valuations(vals, group, opt.nominal_m);
    Json entry = phipoly::report_to_json(rep, "-");
    entry["status"] = "ok";
    doc["reports"] = Json::array({std::move(entry)});
    doc["bound_max"] = rep.bound;
    text += report_to_text(rep, "-");
    if (opt.ascii) text += phipoly::render_polygon_ascii(rep.polygon);
    if (!opt.svg_path.empty()) {
      std::ofstream svg(opt.svg_path);
      if (!svg) throw phipoly::domain_error("cannot write " + opt.svg_path);
      svg << phipoly::render_polygon_svg(rep.polygon);
    }
    return emit_bound_result(opt, doc, text, 1, 0);
  }

  IntPolynomial f = polynomial_input(opt.poly_text, opt.coeffs_text);
  IntPolynomial phi = phipoly::parse_polynomial(opt.phi_text);
  if (opt.primes.empty()) {
    throw phipoly::domain_error("missing --prime");
  }
  doc["input"] = {{"mode", "polynomial"},
                  {"poly", phipoly::poly_to_string(f)},
                  {"phi", phipoly::poly_to_string(phi)},
                  {"group", "z"},
                  {"primes", opt.primes}};
  text += "polynomial          " + phipoly::poly_to_string(f) + "\n";
  text += "phi                 " + phipoly::poly_to_string(phi) + "\n\n";

  Json reports = Json::array();
  std::optional<int> bound_max;
  std::optional<phipoly::BoundReport> first_ok;
  int inapplicable = 0;
  for (const std::string& ptext : opt.primes) {
    std::optional<phipoly::BoundReport> rep;
    reports.push_back(bound_one_prime(f, ptext, phi, opt.ascii, text, rep));
    if (rep) {
      ++successes;
      bound_max = std::max(bound_max.value_or(0), rep->bound);
      if (!first_ok) first_ok = std::move(rep);
    } else {
      ++inapplicable;
    }
  }
  doc["reports"] = std::move(reports);
  if (bound_max) {
    doc["bound_max"] = *bound_max;
    text += "overall bound       " + std::to_string(*bound_max) + "\n";
  } else {
    doc["bound_max"] = nullptr;
  }
  if (!opt.svg_path.empty()) {
    if (!first_ok) {
      throw phipoly::domain_error("no successful report to render as svg");
    }
    std::ofstream svg(opt.svg_path);
    if (!svg) throw phipoly::domain_error("cannot write " + opt.svg_path);
    svg << phipoly::render_polygon_svg(first_ok->polygon);
  }
  return emit_bound_result(opt, doc, text, successes, inapplicable);
}

// Batch mode: one polynomial per line, bounded parallelism, output in input
// order; individual failures do not abort the run.
int run_bound_batch(const BoundOptions& opt) {
  std::ifstream in(opt.batch_path);
  if (!in) throw phipoly::domain_error("cannot read " + opt.batch_path);
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(line);

  IntPolynomial phi = phipoly::parse_polynomial(opt.phi_text);
  if (opt.primes.empty()) throw phipoly::domain_error("missing --prime");
  std::vector<Int> primes;
  for (const std::string& ptext : opt.primes) primes.push_back(parse_prime(ptext));

  std::vector<std::string> out(lines.size());
  std::atomic<std::size_t> next{0};
  int jobs = opt.jobs > 0 ? opt.jobs
                          : std::min(8u, std::max(1u, std::thread::hardware_concurrency()));

  auto worker = [&]() {
    while (true) {
      std::size_t idx = next.fetch_add(1);
      if (idx >= lines.size()) return;
      const std::string& line = lines[idx];
      if (line.empty() || line[0] == '#') continue;
      try {
        IntPolynomial f = phipoly::parse_polynomial(line);
        int best = -1;
        std::string detail;
        for (std::size_t pi = 0; pi < primes.size(); ++pi) {
          try {
            phipoly::BoundReport rep =
                phipoly::factor_degree_bound(f, primes[pi], phi);
            best = std::max(best, rep.bound);
            detail += (detail.empty() ? "" : " ") + opt.primes[pi] + ":" +
                      std::to_string(rep.bound);
          } catch (const phipoly::inapplicable_error&) {
            detail += (detail.empty() ? "" : " ") + opt.primes[pi] + ":-";
          }
        }
        if (opt.json) {
          Json j;
          j["poly"] = phipoly::poly_to_string(f);
          j["bound_max"] = best >= 0 ? Json(best) : Json(nullptr);
          out[idx] = j.dump();
        } else {
          out[idx] = phipoly::poly_to_string(f) + "  " + detail +
                     "  bound_max=" + (best >= 0 ? std::to_string(best) : "-");
        }
      } catch (const std::exception& e) {
        if (opt.json) {
          Json j;
          j["input"] = line;
          j["error"] = e.what();
          out[idx] = j.dump();
        } else {
          out[idx] = "error: " + std::string(e.what()) + "  [" + line + "]";
        }
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();

  for (const std::string& line : out) {
    if (!line.empty()) std::cout << line << "\n";
  }
  return 0;
}

int run_diagnose(const BoundOptions& opt) {
  IntPolynomial f = polynomial_input(opt.poly_text, opt.coeffs_text);
  IntPolynomial phi = phipoly::parse_polynomial(opt.phi_text);
  if (opt.primes.size() != 1) {
    throw phipoly::domain_error("diagnose needs exactly one --prime");
  }
  Int p = parse_prime(opt.primes[0]);
  phipoly::BoundReport rep = phipoly::factor_degree_bound(f, p, phi);
  std::vector<phipoly::ExtendedValue> vals = phipoly::expansion_vals_from(rep);
  std::vector<phipoly::EdgeIdentityVerdict> verdicts =
      phipoly::check_edge_identities(rep, vals);

  if (opt.json) {
    Json doc = document_shell("diagnose");
    doc["input"] = {{"mode", "polynomial"},
                    {"poly", phipoly::poly_to_string(f)},
                    {"phi", phipoly::poly_to_string(phi)},
                    {"prime", opt.primes[0]}};
    doc["report"] = phipoly::report_to_json(rep, opt.primes[0]);
    doc["report"]["status"] = "ok";
    doc["edges"] = phipoly::diagnostics_to_json(verdicts);
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << phipoly::report_to_text(rep, opt.primes[0]);
    std::cout << phipoly::diagnostics_to_text(verdicts);
  }
  for (const phipoly::EdgeIdentityVerdict& v : verdicts) {
    if (!v.ok()) return 3;
  }
  return 0;
}

struct VerifyOptions {
  std::uint64_t seed = 12345;
  int count = 200;
  int max_degree = 6;
  std::string poly_text;
  std::vector<std::string> primes;
  std::uint64_t primes_up_to = 50;
  bool json = false;
};

int run_verify(const VerifyOptions& opt) {
  if (!opt.poly_text.empty()) {
    // Partition cross-check of the bound for one polynomial.
    IntPolynomial f = phipoly::parse_polynomial(opt.poly_text);
    if (opt.primes.size() != 1) {
      throw phipoly::domain_error("verify --poly needs exactly one --prime");
    }
    Int p = parse_prime(opt.primes[0]);
    phipoly::BoundReport rep =
        phipoly::factor_degree_bound(f, p, IntPolynomial::x());
    phipoly::PartitionOutcome outcome = phipoly::partition_verify(
        f, rep, phipoly::small_primes(opt.primes_up_to));
    if (opt.json) {
      Json doc = document_shell("verify");
      doc["input"] = {{"mode", "partition"},
                      {"poly", phipoly::poly_to_string(f)},
                      {"prime", opt.primes[0]},
                      {"primes_up_to", opt.primes_up_to}};
      doc["bound"] = rep.bound;
      doc["partition"] = phipoly::partition_to_json(outcome);
      std::cout << doc.dump(2) << "\n";
    } else {
      std::cout << "bound               " << rep.bound << "\n";
      std::cout << phipoly::partition_to_text(outcome);
    }
    return 0;
  }

  phipoly::CampaignSummary sum =
      phipoly::soundness_campaign(opt.count, opt.max_degree, opt.seed);
  if (opt.json) {
    Json doc = document_shell("verify");
    doc["input"] = {{"mode", "campaign"},
                    {"seed", opt.seed},
                    {"count", opt.count},
                    {"max_degree", opt.max_degree}};
    doc["campaign"] = phipoly::campaign_to_json(sum);
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << phipoly::campaign_to_text(sum);
  }
  return sum.passed() ? 0 : 3;
}

struct TrinomialOptions {
  int n = 0, m = 0, s = 0, r = 0;
  std::string prime_text = "2";
  bool json = false;
};

int run_trinomial(const TrinomialOptions& opt) {
  int formula = phipoly::trinomial_bound(opt.n, opt.m, opt.s, opt.r);
  Int p = parse_prime(opt.prime_text);
  IntPolynomial f = phipoly::realize_trinomial(opt.n, opt.m, opt.s, opt.r, p);
  phipoly::BoundReport rep =
      phipoly::factor_degree_bound(f, p, IntPolynomial::x());
  bool agree = rep.bound == formula;

  if (opt.json) {
    Json doc = document_shell("trinomial");
    doc["input"] = {{"n", opt.n}, {"m", opt.m}, {"s", opt.s}, {"r", opt.r},
                    {"prime", opt.prime_text}};
    doc["formula_bound"] = formula;
    doc["realized_poly"] = phipoly::poly_to_string(f);
    doc["engine_bound"] = rep.bound;
    doc["agree"] = agree;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "formula bound       " << formula << "\n";
    std::cout << "realized            " << phipoly::poly_to_string(f)
              << " at p = " << opt.prime_text << "\n";
    std::cout << "engine bound        " << rep.bound << "\n";
    std::cout << "agreement           " << (agree ? "yes" : "NO") << "\n";
  }
  return agree ? 0 : 3;
}

int run_legacy(const BoundOptions& opt) {
  IntPolynomial f = polynomial_input(opt.poly_text, opt.coeffs_text);
  if (opt.primes.size() != 1) {
    throw phipoly::domain_error("legacy needs exactly one --prime");
  }
  Int p = parse_prime(opt.primes[0]);
  phipoly::LegacyRecord rec = phipoly::legacy_bound(f, p);
  if (opt.json) {
    Json doc = document_shell("legacy");
    doc["input"] = {{"poly", phipoly::poly_to_string(f)}, {"prime", opt.primes[0]}};
    doc["k"] = rec.k;
    doc["r_k"] = rec.r_k.get_str();
    doc["s"] = rec.s;
    doc["applicable"] = rec.applicable;
    doc["bound"] = rec.applicable ? Json(rec.bound) : Json(nullptr);
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "k                   " << rec.k << "\n";
    std::cout << "r_k                 " << rec.r_k.get_str() << "\n";
    std::cout << "s                   " << rec.s << "\n";
    if (rec.applicable) {
      std::cout << "bound               " << rec.bound << "\n";
    } else {
      std::cout << "coprimality fails, no conclusion\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact phi-adic Newton polygons and factor-degree bounds"};
  app.require_subcommand(1);

  BoundOptions bopt;
  CLI::App* bound = app.add_subcommand("bound", "Compute the degree bound");
  bound->add_option("--poly", bopt.poly_text, "Polynomial expression");
  bound->add_option("--coeffs", bopt.coeffs_text,
                    "Comma-separated coefficients, ascending powers");
  bound->add_option("--vals", bopt.vals_text,
                    "Valuation list (direct mode), e.g. 6,1,inf,inf,inf,0");
  bound->add_option("--prime", bopt.primes, "Prime (repeatable)");
  bound->add_option("--phi", bopt.phi_text, "Monic phi, irreducible mod p");
  bound->add_option("--group", bopt.group_text, "Value group: z or zlex:R");
  bound->add_option("--m", bopt.nominal_m, "Nominal deg phi in --vals mode");
  bound->add_flag("--json", bopt.json, "Machine output");
  bound->add_flag("--ascii", bopt.ascii, "Render the polygon as text");
  bound->add_option("--svg", bopt.svg_path, "Write the polygon as SVG");
  bound->add_option("--batch", bopt.batch_path, "File with one polynomial per line");
  bound->add_option("--jobs", bopt.jobs, "Batch parallelism (default: cores, max 8)");

  BoundOptions dopt;
  CLI::App* diag = app.add_subcommand("diagnose", "Per-edge identity checks");
  diag->add_option("--poly", dopt.poly_text, "Polynomial expression");
  diag->add_option("--coeffs", dopt.coeffs_text, "Coefficients, ascending");
  diag->add_option("--prime", dopt.primes, "Prime");
  diag->add_option("--phi", dopt.phi_text, "Monic phi");
  diag->add_flag("--json", dopt.json, "Machine output");

  VerifyOptions vopt;
  CLI::App* verify = app.add_subcommand(
      "verify", "Soundness campaign, or partition check with --poly");
  verify->add_option("--seed", vopt.seed, "Campaign seed");
  verify->add_option("--count", vopt.count, "Number of trials");
  verify->add_option("--max-degree", vopt.max_degree, "Max certified degree");
  verify->add_option("--poly", vopt.poly_text, "Partition-check one polynomial");
  verify->add_option("--prime", vopt.primes, "Prime for the bound");
  verify->add_option("--primes-up-to", vopt.primes_up_to,
                     "Scan modulus bound for partitions");
  verify->add_flag("--json", vopt.json, "Machine output");

  TrinomialOptions topt;
  CLI::App* tri = app.add_subcommand("trinomial", "Closed-form trinomial bound");
  tri->add_option("--n", topt.n, "Degree n")->required();
  tri->add_option("--m", topt.m, "Middle exponent m")->required();
  tri->add_option("--s", topt.s, "v(a), the middle coefficient valuation")->required();
  tri->add_option("--r", topt.r, "v(b), the constant valuation")->required();
  tri->add_option("--prime", topt.prime_text, "Prime used to realize the data");
  tri->add_flag("--json", topt.json, "Machine output");

  BoundOptions lopt;
  CLI::App* legacy = app.add_subcommand("legacy", "Coprimality bound only");
  legacy->add_option("--poly", lopt.poly_text, "Polynomial expression");
  legacy->add_option("--coeffs", lopt.coeffs_text, "Coefficients, ascending");
  legacy->add_option("--prime", lopt.primes, "Prime");
  legacy->add_flag("--json", lopt.json, "Machine output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (bound->parsed()) {
      return bopt.batch_path.empty() ? run_bound_single(bopt)
                                     : run_bound_batch(bopt);
    }
    if (diag->parsed()) return run_diagnose(dopt);
    if (verify->parsed()) return run_verify(vopt);
    if (tri->parsed()) return run_trinomial(topt);
    if (legacy->parsed()) return run_legacy(lopt);
  } catch (const phipoly::inapplicable_error& e) {
    std::cerr << "inapplicable: " << e.what() << "\n";
    return 1;
  } catch (const phipoly::parse_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const phipoly::domain_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const phipoly::internal_check_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
