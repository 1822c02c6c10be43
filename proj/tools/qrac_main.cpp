#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "qrac/cloning.hpp"
#include "qrac/geometry.hpp"
#include "qrac/optimizer.hpp"
#include "qrac/rng.hpp"
#include "qrac/scheme_io.hpp"
#include "qrac/tolerances.hpp"

namespace {

using nlohmann::json;
using namespace qrac;

int g_digits = 9;  // significant digits for printed numbers; 17 with --full-precision

double round_sig(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", g_digits, v);
  return std::strtod(buf, nullptr);
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", g_digits, v);
  return buf;
}

QracScheme resolve_builtin(const std::string& name) {
  if (name == "example3") return example3_scheme().scheme;
  return standard_scheme(name);
}

QracScheme resolve_scheme(const std::string& builtin, const std::string& file) {
  if (!builtin.empty()) return resolve_builtin(builtin);
  return load_scheme(file);
}

json report_to_json(const QracScheme& scheme, const EvaluationReport& report) {
  return json{{"label", scheme.label()},
              {"n", scheme.n()},
              {"m", scheme.m()},
              {"worst_case_p", round_sig(report.worst_case_p)},
              {"average_p", round_sig(report.average_p)},
              {"argmin_cell",
               {{"x", index_to_bits(report.argmin_cell.x_index, scheme.n())},
                {"bit", report.argmin_cell.bit}}}};
}

void write_cells_csv(const QracScheme& scheme, const EvaluationReport& report,
                     std::ostream& out) {
  out << "x,bit,probability\n";
  for (std::size_t x = 0; x < scheme.num_states(); ++x)
    for (std::size_t i = 1; i <= scheme.n(); ++i)
      out << index_to_bits(x, scheme.n()) << "," << i << ","
          << fmt(report.per_cell[x][i - 1]) << "\n";
}

int run_eval(const std::string& builtin, const std::string& file, const std::string& csv) {
  const QracScheme scheme = resolve_scheme(builtin, file);
  const EvaluationReport report = evaluate_scheme(scheme);
  std::cout << report_to_json(scheme, report).dump(2) << "\n";
  if (!csv.empty()) {
    std::ofstream out(csv);
    if (!out) throw Error("cannot open CSV output: " + csv);
    write_cells_csv(scheme, report, out);
  }
  return 0;
}

const char* status_name(NoGoStatus s) {
  switch (s) {
    case NoGoStatus::Refuted:
      return "refuted";
    case NoGoStatus::ConsistentAtHalfspaceLevel:
      return "consistent-at-halfspace-level";
    case NoGoStatus::InconsistencyWithTheory:
      return "inconsistency-with-theory";
  }
  return "unknown";
}

int run_nogo(const std::string& builtin, const std::string& file, double claimed_p) {
  const QracScheme scheme = resolve_scheme(builtin, file);
  const NoGoReport report = no_go_certificate(scheme, claimed_p);

  json halfspaces = json::array();
  for (const Halfspace& h : report.halfspaces) {
    json s = json::array();
    for (double v : h.s) s.push_back(round_sig(v));
    halfspaces.push_back(json{{"bit", h.source_index},
                              {"s", std::move(s)},
                              {"c", round_sig(h.c)},
                              {"degenerate", h.degenerate}});
  }
  json checks = json::array();
  for (const CellCheck& c : report.checks) {
    checks.push_back(json{{"x", index_to_bits(c.x_index, scheme.n())},
                          {"bit", c.bit},
                          {"slack", round_sig(c.slack)},
                          {"ok", c.ok}});
  }
  json doc{{"label", scheme.label()},
           {"claimed_p", round_sig(claimed_p)},
           {"status", status_name(report.status)},
           {"halfspaces", std::move(halfspaces)},
           {"checks", std::move(checks)}};
  if (report.violated) {
    doc["violated"] = json{{"x", index_to_bits(report.violated->x_index, scheme.n())},
                           {"bit", report.violated->bit},
                           {"slack", round_sig(report.violated->slack)}};
  } else {
    doc["violated"] = nullptr;
  }
  if (report.counting_applicable) {
    doc["counting"] = json{{"hyperplanes", scheme.n()},
                           {"dimension", (std::uint64_t{1} << (2 * scheme.m())) - 1},
                           {"max_regions", report.max_regions_value},
                           {"required_regions", report.required_regions},
                           {"impossible", report.max_regions_value < report.required_regions}};
  } else {
    doc["counting"] = nullptr;
  }
  std::cout << doc.dump(2) << "\n";
  if (report.status == NoGoStatus::InconsistencyWithTheory) {
    std::cerr << "inconsistency with the counting certificate -- check tolerances\n";
    return 3;
  }
  return 0;
}

int run_regions(bool has_kd, std::uint64_t k, std::uint64_t d,
                const std::string& from_scheme, double margin) {
  if (has_kd) {
    json doc{{"k", k}, {"d", d}, {"max_regions", max_regions(k, d)}};
    std::cout << doc.dump(2) << "\n";
    return 0;
  }
  QracScheme scheme = std::filesystem::exists(from_scheme) ? load_scheme(from_scheme)
                                                           : resolve_builtin(from_scheme);
  std::vector<Halfspace> halfspaces;
  for (std::size_t i = 1; i <= scheme.n(); ++i)
    halfspaces.push_back(povm_to_halfspace(scheme.povm(i), i));
  const std::size_t dim = (std::size_t{1} << (2 * scheme.m())) - 1;
  const auto witnesses = realized_patterns(halfspaces, dim, margin);
  json wit = json::array();
  for (const RegionWitness& w : witnesses) {
    json entry{{"pattern", w.pattern.bits},
               {"status", w.status == WitnessStatus::Realized ? "realized"
                          : w.status == WitnessStatus::EmptyWithinTolerance
                              ? "empty-within-tolerance"
                              : "undecided"},
               {"margin", round_sig(w.margin)}};
    if (w.point) {
      json p = json::array();
      for (double v : *w.point) p.push_back(round_sig(v));
      entry["point"] = std::move(p);
    }
    wit.push_back(std::move(entry));
  }
  json doc{{"label", scheme.label()},
           {"k", scheme.n()},
           {"d", dim},
           {"max_regions", max_regions(scheme.n(), dim)},
           {"realized", count_realized(witnesses)},
           {"witnesses", std::move(wit)}};
  std::cout << doc.dump(2) << "\n";
  return 0;
}

int run_optimize(const SeeSawConfig& config, std::size_t n, std::size_t m,
                 std::string prefix) {
  const SearchResult result = see_saw(n, m, config);
  if (prefix.empty()) {
    std::ostringstream p;
    p << "seesaw-n" << n << "m" << m;
    prefix = p.str();
  }
  save_scheme(result.scheme, prefix + ".scheme.json");

  json report = report_to_json(result.scheme, result.report);
  report["converged"] = result.converged;
  report["config"] = json{{"restarts", config.restarts},
                          {"max_iters", config.max_iters},
                          {"conv_tol", config.conv_tol},
                          {"seed", config.seed},
                          {"objective",
                           config.objective == SeeSawConfig::Objective::Weighted
                               ? "weighted"
                               : "average"},
                          {"reweight_rounds", config.reweight_rounds},
                          {"reweight_rate", config.reweight_rate}};
  std::ofstream rep(prefix + ".report.json");
  if (!rep) throw Error("cannot open report output");
  rep << report.dump(2) << "\n";

  std::ofstream trace(prefix + ".trace.csv");
  if (!trace) throw Error("cannot open trace output");
  trace << "restart,round,iteration,objective,average_p,worst_case_p\n";
  char buf[160];
  for (const TracePoint& t : result.trace) {
    std::snprintf(buf, sizeof buf, "%zu,%zu,%zu,%.17g,%.17g,%.17g\n", t.restart, t.round,
                  t.iter, t.objective, t.average_p, t.worst_case_p);
    trace << buf;
  }

  std::cout << "seesaw n=" << n << " m=" << m << " seed=" << config.seed
            << " restarts=" << config.restarts
            << " worst_case_p=" << fmt(result.report.worst_case_p)
            << " average_p=" << fmt(result.report.average_p)
            << " converged=" << (result.converged ? "true" : "false") << "\n";
  return 0;
}

int run_demo(const std::string& name) {
  if (name == "example3") {
    const Example3 ex = example3_scheme();
    const EvaluationReport report = evaluate_scheme(ex.scheme);
    std::cout << "example3: clone-and-measure four-bit scheme (n=4, m=1)\n";
    std::cout << "p0 (success given the favorable block) = " << fmt(ex.p0) << "\n";
    std::cout << "naive claim (p0 + 1/2)/2               = " << fmt(ex.naive_claim)
              << (ex.naive_claim > 0.5 ? "  (> 1/2)" : "") << "\n";
    std::cout << "simulated worst_case_p                 = " << fmt(report.worst_case_p)
              << (report.worst_case_p <= 0.5 + 1e-9 ? "  (<= 1/2)" : "") << "\n";
    std::cout << "simulated average_p                    = " << fmt(report.average_p) << "\n";
    std::cout << "argmin cell: x=" << index_to_bits(report.argmin_cell.x_index, 4)
              << " bit=" << report.argmin_cell.bit << "\n";
    std::cout << "The naive argument ignores that a wrong-block clone still biases the\n"
                 "conditional measurement; the worst cells sit exactly at 1/2.\n";
    std::cout << "per-cell table:\nx,bit1,bit2,bit3,bit4\n";
    for (std::size_t x = 0; x < 16; ++x) {
      std::cout << index_to_bits(x, 4);
      for (std::size_t i = 0; i < 4; ++i) std::cout << "," << fmt(report.per_cell[x][i]);
      std::cout << "\n";
    }
    return 0;
  }
  if (name == "hinry7") {
    const QracScheme scheme = standard_scheme("hinry7");
    const EvaluationReport report = evaluate_scheme(scheme);
    const double closed_form = (9.0 + 2.0 * std::sqrt(3.0)) / 23.0;
    std::cout << "hinry7: the (7,2)-coding, exhaustive 128 x 7 cell evaluation\n";
    for (std::size_t i = 1; i <= 7; ++i) {
      double worst = 2.0;
      for (std::size_t x = 0; x < scheme.num_states(); ++x)
        worst = std::min(worst, report.per_cell[x][i - 1]);
      std::cout << "bit " << i << " worst case = " << fmt(worst) << "\n";
    }
    std::cout << "overall worst_case_p = " << fmt(report.worst_case_p) << "\n";
    std::cout << "closed form (9+2*sqrt(3))/23 = " << fmt(closed_form) << "\n";
    std::cout << "difference = " << fmt(std::abs(report.worst_case_p - closed_form)) << "\n";
    std::cout << "average_p = " << fmt(report.average_p) << "\n";
    return 0;
  }
  if (name == "nayak") {
    std::cout << "Nayak bound m >= (1 - H(p)) n\n";
    std::cout << "p,H(p),qubits_per_bit,m_lower_bound_n4\n";
    const double ps[] = {0.51, 0.55, 0.60, 0.65, 0.70, 0.75, 0.80, 0.85, 0.90, 0.95};
    for (double p : ps) {
      const double per_bit = nayak_bound(1, p);
      std::cout << fmt(p) << "," << fmt(1.0 - per_bit) << "," << fmt(per_bit) << ","
                << fmt(nayak_bound(4, p)) << "\n";
    }
    std::cout << "at p just above 1/2 the bound says only m > 0 (e.g. n=4, p=0.51: "
              << fmt(nayak_bound(4, 0.51)) << " qubits)\n";
    return 0;
  }
  throw InvalidArgumentError("unknown demo: " + name +
                             " (expected example3, hinry7 or nayak)");
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("QRAC_SEED")) {
    char* end = nullptr;
    const std::uint64_t v = std::strtoull(env, &end, 10);
    if (end && *end == '\0') return v;
    throw InvalidArgumentError("QRAC_SEED must be an unsigned integer");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum random access coding toolkit"};
  app.require_subcommand(1);
  bool full_precision = false;
  app.add_flag("--full-precision", full_precision, "print 17 significant digits");

  auto* eval = app.add_subcommand("eval", "evaluate a scheme's success probabilities");
  std::string eval_builtin, eval_file, eval_csv;
  auto* eb = eval->add_option("--builtin", eval_builtin,
                              "ambainis2, chuang3, hinry7 or example3");
  auto* ef = eval->add_option("--file", eval_file, "scheme JSON file");
  eval->add_option("--csv", eval_csv, "write the per-cell table to this CSV file");
  eb->excludes(ef);

  auto* nogo = app.add_subcommand("nogo", "halfspace certificate against a claimed p");
  std::string nogo_builtin, nogo_file;
  double claimed_p = 0.0;
  auto* nb = nogo->add_option("--builtin", nogo_builtin, "builtin scheme name");
  auto* nf = nogo->add_option("--file", nogo_file, "scheme JSON file");
  nogo->add_option("--claimed-p", claimed_p, "claimed success probability (> 0.5)")
      ->required();
  nb->excludes(nf);

  auto* regions = app.add_subcommand("regions", "hyperplane region counting");
  std::uint64_t reg_k = 0, reg_d = 0;
  std::string from_scheme;
  double margin = tol::margin_default;
  auto* rk = regions->add_option("--k", reg_k, "number of hyperplanes");
  auto* rd = regions->add_option("--d", reg_d, "ball dimension");
  auto* rs = regions->add_option("--from-scheme", from_scheme,
                                 "builtin name or scheme file: count realized patterns");
  regions->add_option("--margin", margin, "feasibility margin (default 1e-7)");
  rk->needs(rd);
  rd->needs(rk);
  rs->excludes(rk);

  auto* optimize = app.add_subcommand("optimize", "see-saw search for an (n, m) coding");
  std::size_t opt_n = 0, opt_m = 0;
  SeeSawConfig config;
  bool seed_given = false;
  std::string objective = "weighted", prefix;
  optimize->add_option("--n", opt_n, "bits to encode")->required();
  optimize->add_option("--m", opt_m, "qubits to send")->required();
  optimize->add_option("--seed", config.seed, "master seed (default: QRAC_SEED or 0)")
      ->each([&seed_given](const std::string&) { seed_given = true; });
  optimize->add_option("--restarts", config.restarts, "random restarts (default 32)");
  optimize->add_option("--max-iters", config.max_iters, "iterations per segment (default 500)");
  optimize->add_option("--conv-tol", config.conv_tol, "objective convergence (default 1e-9)");
  optimize->add_option("--reweight-rounds", config.reweight_rounds,
                       "multiplicative-weights rounds (default 20)");
  optimize->add_option("--reweight-rate", config.reweight_rate, "reweighting rate (default 0.5)");
  optimize->add_option("--objective", objective, "average or weighted (default weighted)");
  optimize->add_option("--out", prefix, "output file prefix");

  auto* demo = app.add_subcommand("demo", "narrative reproductions");
  std::string demo_name;
  demo->add_option("name", demo_name, "example3, hinry7 or nayak")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  g_digits = full_precision ? 17 : 9;
  try {
    if (eval->parsed()) {
      if (eval_builtin.empty() && eval_file.empty())
        throw InvalidArgumentError("eval: provide --builtin or --file");
      return run_eval(eval_builtin, eval_file, eval_csv);
    }
    if (nogo->parsed()) {
      if (nogo_builtin.empty() && nogo_file.empty())
        throw InvalidArgumentError("nogo: provide --builtin or --file");
      if (!(claimed_p > 0.5))
        throw InvalidArgumentError("nogo: nothing to refute, claimed-p must exceed 0.5");
      return run_nogo(nogo_builtin, nogo_file, claimed_p);
    }
    if (regions->parsed()) {
      const bool has_kd = rk->count() > 0;
      if (!has_kd && from_scheme.empty())
        throw InvalidArgumentError("regions: provide --k/--d or --from-scheme");
      return run_regions(has_kd, reg_k, reg_d, from_scheme, margin);
    }
    if (optimize->parsed()) {
      if (!seed_given) config.seed = default_seed();
      if (objective == "average") {
        config.objective = SeeSawConfig::Objective::Average;
      } else if (objective == "weighted") {
        config.objective = SeeSawConfig::Objective::Weighted;
      } else {
        throw InvalidArgumentError("optimize: objective must be average or weighted");
      }
      return run_optimize(config, opt_n, opt_m, prefix);
    }
    if (demo->parsed()) return run_demo(demo_name);
  } catch (const SchemeFormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidArgumentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CapacityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
