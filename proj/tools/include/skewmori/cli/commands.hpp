#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "skewmori/cli/serialize.hpp"

namespace skewmori::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kDomain = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  int n = -1;  // -1: not given
  std::uint64_t seed = 0;
  std::int64_t bound = 100;
  int trials = 5;
  bool json = false;
  std::string only;
};

Json to_json(const RunConfig& c);

struct Check {
  std::string suite;
  std::string name;
  std::string claim;  // what is being reproduced
  bool pass = false;
  std::string detail;
};

struct Report {
  std::string command;
  RunConfig config;
  Json options = Json::object();  // command-specific flags
  Json payload = Json::object();  // merged into the top-level JSON object
  std::string text;
  std::vector<Check> checks;

  bool ok() const;
};

// JSON: {"command", "config", <options>, <payload...>}; text: report.text.
std::string render(const Report& report, bool json);

Report cmd_verify(const RunConfig& config);
Report cmd_pfaffian(const RunConfig& config, int size, const std::vector<int>& minor);
Report cmd_classes(const RunConfig& config);
Report cmd_cones(const RunConfig& config, const std::string& which);
Report cmd_gkz(const RunConfig& config);
Report cmd_sbl(const RunConfig& config);
Report cmd_sample(const RunConfig& config, int h);
Report cmd_blowup(const RunConfig& config);

const std::vector<std::string>& verify_suites();
std::vector<Check> run_verify(const RunConfig& config);

// Full command line entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace skewmori::cli
