// evfuse: Dempster-Shafer evidential fusion with GBJS divergence weighting.
//
// Subcommands:
//   fuse             run the full fusion pipeline on an evidence file
//   divergence       GBJS divergence of the sources in an evidence file
//   combine          plain Dempster combination over the listed sources
//   reproduce-paper  check the library against the published reference tables

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "evfuse/evfuse.hpp"

namespace {

using namespace evfuse;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(Errc::io_error, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) raise(Errc::io_error, "failed reading '" + path + "'");
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) raise(Errc::io_error, "cannot open '" + path + "' for writing");
  out << content;
  if (!out) raise(Errc::io_error, "failed writing '" + path + "'");
}

struct CommonOpts {
  std::string input;
  std::string out_path;
  int precision = 4;
  bool strict_normalize = false;
};

std::pair<Frame, std::vector<EvidenceSource>> load_sources(const CommonOpts& opts) {
  MassFunctionOptions mopts;
  mopts.renormalize = opts.strict_normalize;
  return bind_evidence(parse_evidence(read_file(opts.input)), mopts);
}

int cmd_fuse(const CommonOpts& opts) {
  auto [frame, sources] = load_sources(opts);
  FusionReport report = fuse(sources);
  std::cout << render_report_text(sources, report, opts.precision);
  if (!opts.out_path.empty())
    write_file(opts.out_path, report_to_json(sources, report).dump(2) + "\n");
  return 0;
}

int cmd_combine(const CommonOpts& opts) {
  auto [frame, sources] = load_sources(opts);
  std::vector<MassFunction> bbas;
  bbas.reserve(sources.size());
  for (const auto& s : sources) bbas.push_back(s.mass);
  MassFunction combined = combine_n(bbas);

  std::cout << "Dempster combination of " << bbas.size() << " sources\n";
  std::cout << format_mass_table(combined, opts.precision, "  ");
  if (!opts.out_path.empty()) {
    nlohmann::json j;
    j["frame"] = frame.elements();
    j["combined"] = detail::mass_to_json(combined);
    write_file(opts.out_path, j.dump(2) + "\n");
  }
  return 0;
}

int cmd_divergence(const CommonOpts& opts, const std::vector<double>& weights, bool equal) {
  auto [frame, sources] = load_sources(opts);
  std::vector<MassFunction> bbas;
  bbas.reserve(sources.size());
  for (const auto& s : sources) bbas.push_back(s.mass);

  double value = 0.0;
  if (equal) {
    value = gbjs_equal_weights(bbas);
  } else {
    value = gbjs_divergence(bbas, WeightVector(weights));
  }

  char fixed[64];
  std::snprintf(fixed, sizeof(fixed), "%.*f", opts.precision, value);
  char full[64];
  std::snprintf(full, sizeof(full), "%.17g", value);
  std::cout << "GBJS divergence over " << bbas.size() << " sources\n";
  std::cout << "  value: " << fixed << "\n";
  std::cout << "  full:  " << full << "\n";
  if (!opts.out_path.empty()) {
    nlohmann::json j;
    j["k"] = bbas.size();
    j["divergence"] = value;
    write_file(opts.out_path, j.dump(2) + "\n");
  }
  return 0;
}

// ---- reproduce-paper -------------------------------------------------------

struct Check {
  std::string name;
  std::string detail;
  bool pass;
};

std::string fmt(double v, const char* spec = "%.6f") {
  char buf[64];
  std::snprintf(buf, sizeof(buf), spec, v);
  return buf;
}

void check_value(std::vector<Check>& checks, const std::string& name, double computed,
                 double published, double tol) {
  const bool pass = std::abs(computed - published) <= tol;
  checks.push_back({name, "computed " + fmt(computed) + "  published " + fmt(published) +
                              "  tol " + fmt(tol, "%.0e"),
                    pass});
}

std::vector<Check> run_reproduction() {
  std::vector<Check> checks;

  // Worked divergence examples.
  {
    const auto ex1 = refdata::example_identical();
    checks.push_back({"divergence " + ex1.name,
                      "computed " + fmt(gbjs_equal_weights(refdata::example_bbas(ex1))) +
                          "  published 0  tol 1e-09",
                      std::abs(gbjs_equal_weights(refdata::example_bbas(ex1))) <= 1e-9});

    const auto ex2 = refdata::example_weighted();
    check_value(checks, "divergence " + ex2.name,
                gbjs_divergence(refdata::example_bbas(ex2), WeightVector(ex2.weights)),
                ex2.published_value, 5e-4);

    const auto quad = refdata::conflict_quadruple();
    for (const auto& triple : refdata::conflict_triples()) {
      std::vector<MassFunction> ms;
      for (auto idx : triple.indices) ms.push_back(quad[idx]);
      const double g = gbjs_equal_weights(ms);
      std::string which = "m" + std::to_string(triple.indices[0] + 1) + ",m" +
                          std::to_string(triple.indices[1] + 1) + ",m" +
                          std::to_string(triple.indices[2] + 1);
      check_value(checks, "divergence triple " + which, g, triple.published_value, 5e-4);
      check_value(checks, "sqrt divergence " + which, std::sqrt(g), triple.published_sqrt, 5e-4);
    }
    const auto& triples = refdata::conflict_triples();
    std::vector<double> roots;
    for (const auto& t : triples) {
      std::vector<MassFunction> ms;
      for (auto idx : t.indices) ms.push_back(quad[idx]);
      roots.push_back(std::sqrt(gbjs_equal_weights(ms)));
    }
    const bool tri = roots[1] <= roots[0] + roots[2];
    checks.push_back({"triangle inequality",
                      fmt(roots[1]) + " <= " + fmt(roots[0]) + " + " + fmt(roots[2]), tri});
  }

  // Fusion tables for the bundled sensor dataset.
  for (const auto& fc : refdata::frequency_cases()) {
    const Frame frame = refdata::fault_frame();
    const auto sources = refdata::build_sources(fc);
    const FusionReport report = fuse(sources);

    for (const auto& row : fc.published_wae) {
      const Proposition p = frame.proposition(std::span<const std::string>(row.proposition));
      check_value(checks, "wae " + fc.name + " " + frame.format(p), report.wae.mass(p), row.mass,
                  1e-3);
    }
    for (const auto& row : fc.published_fusion) {
      const Proposition p = frame.proposition(std::span<const std::string>(row.proposition));
      check_value(checks, "fusion " + fc.name + " " + frame.format(p),
                  report.final_mass.mass(p), row.mass, 1e-3);
    }
    const auto target = diagnose(report.final_mass);
    checks.push_back({"diagnosis " + fc.name,
                      "computed " + (target ? frame.format(*target) : std::string("(none)")) +
                          "  published {F2}",
                      target && *target == frame.singleton("F2")});

    // Reference rows (not computed here): the fused belief on {F2} must exceed them.
    for (const auto& row : fc.reference_fusion) {
      if (row.proposition != std::vector<std::string>{"F2"}) continue;
      const double ours = belief(report.final_mass, frame.singleton("F2"));
      checks.push_back({"comparison " + fc.name,
                        "belief({F2}) " + fmt(ours) + " > reference " + fmt(row.mass), ours > row.mass});
    }
  }
  return checks;
}

int cmd_reproduce_paper() {
  auto checks = run_reproduction();
  std::size_t width = 0;
  for (const auto& c : checks) width = std::max(width, c.name.size());
  std::size_t failures = 0;
  std::cout << "Reproduction of the published reference results\n";
  for (const auto& c : checks) {
    std::string name = c.name;
    name.resize(width, ' ');
    std::cout << "  " << name << "  " << (c.pass ? "PASS" : "FAIL") << "  " << c.detail << "\n";
    if (!c.pass) ++failures;
  }

  const Frame frame = refdata::fault_frame();
  std::cout << "\nJiang et al. rows (reference, not computed):\n";
  for (const auto& fc : refdata::frequency_cases()) {
    std::cout << "  " << fc.name << ":";
    for (const auto& row : fc.reference_fusion) {
      const Proposition p = frame.proposition(std::span<const std::string>(row.proposition));
      std::cout << "  " << frame.format(p) << " " << fmt(row.mass, "%.4f");
    }
    std::cout << "\n";
  }

  std::cout << (failures == 0 ? "\nAll " + std::to_string(checks.size()) + " checks passed\n"
                              : "\n" + std::to_string(failures) + " of " +
                                    std::to_string(checks.size()) + " checks failed\n");
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dempster-Shafer evidential fusion with GBJS divergence weighting"};
  app.require_subcommand(1);

  CommonOpts fuse_opts;
  auto* fuse_cmd = app.add_subcommand("fuse", "Run the full fusion pipeline on an evidence file");
  fuse_cmd->add_option("input", fuse_opts.input, "evidence JSON file")->required();
  fuse_cmd->add_option("--out", fuse_opts.out_path, "write a JSON report here");
  fuse_cmd->add_option("--precision", fuse_opts.precision, "text report decimals")
      ->check(CLI::Range(0, 17));
  fuse_cmd->add_flag("--strict-normalize", fuse_opts.strict_normalize,
                     "renormalize parsed masses to sum exactly 1");

  CommonOpts div_opts;
  std::vector<double> weights;
  bool equal = false;
  auto* div_cmd = app.add_subcommand("divergence", "GBJS divergence of the sources in a file");
  div_cmd->add_option("input", div_opts.input, "evidence JSON file")->required();
  auto* w_opt = div_cmd->add_option("--weights", weights, "comma-separated reliability weights")
                    ->delimiter(',');
  auto* eq_opt = div_cmd->add_flag("--equal", equal, "use uniform weights 1/k");
  w_opt->excludes(eq_opt);
  div_cmd->add_option("--out", div_opts.out_path, "write a JSON result here");
  div_cmd->add_option("--precision", div_opts.precision, "printed decimals")
      ->check(CLI::Range(0, 17));

  CommonOpts combine_opts;
  auto* combine_cmd =
      app.add_subcommand("combine", "Plain Dempster combination over the listed sources");
  combine_cmd->add_option("input", combine_opts.input, "evidence JSON file")->required();
  combine_cmd->add_option("--out", combine_opts.out_path, "write a JSON result here");
  combine_cmd->add_option("--precision", combine_opts.precision, "text report decimals")
      ->check(CLI::Range(0, 17));
  combine_cmd->add_flag("--strict-normalize", combine_opts.strict_normalize,
                        "renormalize parsed masses to sum exactly 1");

  auto* repro_cmd = app.add_subcommand(
      "reproduce-paper", "Check the library against the published reference tables");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*fuse_cmd) return cmd_fuse(fuse_opts);
    if (*div_cmd) {
      if (!equal && weights.empty()) {
        std::cerr << "divergence: pass --weights or --equal\n";
        return static_cast<int>(Errc::unnormalized_weights);
      }
      return cmd_divergence(div_opts, weights, equal);
    }
    if (*combine_cmd) return cmd_combine(combine_opts);
    if (*repro_cmd) return cmd_reproduce_paper();
  } catch (const evfuse::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(Errc::io_error);
  }
  return 0;
}
