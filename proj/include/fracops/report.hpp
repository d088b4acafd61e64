#ifndef FRACOPS_REPORT_HPP
#define FRACOPS_REPORT_HPP

#include <string>
#include <vector>

namespace fracops::report {

/// Outcome of one analytic-identity check.
struct VerificationReport {
  std::string check_name;
  std::vector<double> grid;
  double max_rel_err = 0.0;
  double mean_rel_err = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  int n_points = 0;
  std::string note;
};

/// Header "check_name,max_rel_err,tolerance,pass" plus one row per report.
std::string to_csv(const std::vector<VerificationReport>& reports);

/// JSON array; numeric fields round-trip bit-exactly.
std::string to_json(const std::vector<VerificationReport>& reports);
std::vector<VerificationReport> from_json(const std::string& text);

/// Fold a pointwise relative error into a report under construction.
void accumulate_error(VerificationReport& report, double got, double want,
                      double scale_floor = 1e-30);

/// Finalize pass flag and mean after accumulation.
void finalize(VerificationReport& report);

}  // namespace fracops::report

#endif  // FRACOPS_REPORT_HPP
