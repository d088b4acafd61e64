#include "fracops/report.hpp"

#include <cmath>
#include <sstream>

#include "json.hpp"

namespace fracops::report {

void accumulate_error(VerificationReport& report, double got, double want,
                      double scale_floor) {
  const double scale = std::max(std::abs(want), scale_floor);
  const double rel = std::abs(got - want) / scale;
  report.max_rel_err = std::max(report.max_rel_err, rel);
  report.mean_rel_err += rel;
  report.n_points += 1;
}

void finalize(VerificationReport& report) {
  if (report.n_points > 0) report.mean_rel_err /= report.n_points;
  report.pass = report.max_rel_err <= report.tolerance;
}

std::string to_csv(const std::vector<VerificationReport>& reports) {
  std::ostringstream out;
  out.precision(17);
  out << "check_name,max_rel_err,tolerance,pass\n";
  for (const auto& r : reports) {
    out << r.check_name << ',' << r.max_rel_err << ',' << r.tolerance << ','
        << (r.pass ? "true" : "false") << '\n';
  }
  return out.str();
}

namespace {

nlohmann::json report_to_json(const VerificationReport& r) {
  return nlohmann::json{{"check_name", r.check_name},
                        {"grid", r.grid},
                        {"max_rel_err", r.max_rel_err},
                        {"mean_rel_err", r.mean_rel_err},
                        {"tolerance", r.tolerance},
                        {"pass", r.pass},
                        {"n_points", r.n_points},
                        {"note", r.note}};
}

VerificationReport report_from_json(const nlohmann::json& j) {
  VerificationReport r;
  r.check_name = j.at("check_name").get<std::string>();
  r.grid = j.at("grid").get<std::vector<double>>();
  r.max_rel_err = j.at("max_rel_err").get<double>();
  r.mean_rel_err = j.at("mean_rel_err").get<double>();
  r.tolerance = j.at("tolerance").get<double>();
  r.pass = j.at("pass").get<bool>();
  r.n_points = j.at("n_points").get<int>();
  r.note = j.at("note").get<std::string>();
  return r;
}

}  // namespace

std::string to_json(const std::vector<VerificationReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) arr.push_back(report_to_json(r));
  return arr.dump(2);
}

std::vector<VerificationReport> from_json(const std::string& text) {
  const nlohmann::json arr = nlohmann::json::parse(text);
  std::vector<VerificationReport> out;
  for (const auto& j : arr) out.push_back(report_from_json(j));
  return out;
}

}  // namespace fracops::report
