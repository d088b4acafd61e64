#ifndef FRACOPS_VERIFY_HPP
#define FRACOPS_VERIFY_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "fracops/report.hpp"

namespace fracops::verify {

using report::VerificationReport;

/// Optional parameter overrides from the command line; empty vectors
/// select each suite's built-in defaults.
struct Options {
  std::vector<double> nu;
  std::vector<double> alpha;
};

using Suite = std::function<std::vector<VerificationReport>(const Options&)>;

/// Static registry of the named verification suites.
const std::map<std::string, Suite>& suites();

/// Convenience: run one suite by name; throws ConfigError if unknown.
std::vector<VerificationReport> run_suite(const std::string& name,
                                          const Options& opts = {});

}  // namespace fracops::verify

#endif  // FRACOPS_VERIFY_HPP
