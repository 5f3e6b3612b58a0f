#include <CLI11.hpp>

#include <ostream>

#include "skewmori/cli/commands.hpp"
#include "skewmori/errors.hpp"

namespace skewmori::cli {

namespace {

std::vector<int> parse_minor(const std::string& s) {
  std::vector<int> out;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) throw UsageError("--minor expects comma-separated indices");
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(cur, &used));
      if (used != cur.size()) throw UsageError("bad index '" + cur + "' in --minor");
    } catch (const std::logic_error&) {
      throw UsageError("bad index '" + cur + "' in --minor");
    }
    cur.clear();
  };
  for (char c : s) {
    if (c == ',') flush();
    else cur += c;
  }
  flush();
  return out;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Birational geometry of the spaces of complete skew-forms A(n)", "skewmori"};
  app.require_subcommand(1);
  RunConfig config;
  int size = -1;
  int h = 1;
  std::string minor;
  std::string cone = "nef";

  auto common = [&](CLI::App* sub) {
    sub->add_option("--n", config.n, "index n of A(n)")->check(CLI::NonNegativeNumber);
    sub->add_option("--seed", config.seed, "random seed");
    sub->add_option("--bound", config.bound, "entries are drawn from [-bound, bound]")->check(CLI::PositiveNumber);
    sub->add_option("--trials", config.trials, "samples per multiplicity estimate")->check(CLI::PositiveNumber);
    sub->add_flag("--json", config.json, "emit JSON");
  };

  auto* verify = app.add_subcommand("verify", "replay the reference tables");
  common(verify);
  verify->add_option("--only", config.only, "run one suite");
  auto* pf = app.add_subcommand("pfaffian", "symbolic sub-Pfaffian");
  common(pf);
  pf->add_option("--size", size, "matrix size (default n+1)");
  pf->add_option("--minor", minor, "row/column indices, e.g. 0,1,2,3");
  auto* classes = app.add_subcommand("classes", "divisor and curve classes");
  common(classes);
  auto* cones = app.add_subcommand("cones", "one cone of A(n)");
  common(cones);
  cones->add_option("--cone", cone, "nef, eff, mov, mori or movcurves");
  auto* gkz = app.add_subcommand("gkz", "GKZ chamber decomposition of Eff");
  common(gkz);
  auto* sbl = app.add_subcommand("sbl", "stable base locus regions");
  common(sbl);
  auto* sample = app.add_subcommand("sample", "random point of a secant variety");
  common(sample);
  sample->add_option("--secant", h, "secant index h")->check(CLI::PositiveNumber);
  auto* blowup = app.add_subcommand("blowup", "decomposition of Eff(A(n)_1)");
  common(blowup);

  try {
    std::vector<std::string> args;
    for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "skewmori: " << e.what() << "\n";
    return kUsage;
  }

  try {
    Report report;
    if (*verify) report = cmd_verify(config);
    else if (*pf) report = cmd_pfaffian(config, size, minor.empty() ? std::vector<int>{} : parse_minor(minor));
    else if (*classes) report = cmd_classes(config);
    else if (*cones) report = cmd_cones(config, cone);
    else if (*gkz) report = cmd_gkz(config);
    else if (*sbl) report = cmd_sbl(config);
    else if (*sample) report = cmd_sample(config, h);
    else report = cmd_blowup(config);
    out << render(report, config.json);
    return report.ok() ? kOk : kVerifyFailed;
  } catch (const UsageError& e) {
    err << "skewmori: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {  // DimensionError
    err << "skewmori: " << e.what() << "\n";
    return kDomain;
  } catch (const std::domain_error& e) {
    err << "skewmori: " << e.what() << "\n";
    return kDomain;
  }
}

}  // namespace skewmori::cli
