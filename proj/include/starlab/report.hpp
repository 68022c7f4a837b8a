#ifndef STARLAB_REPORT_HPP
#define STARLAB_REPORT_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

namespace starlab {

// paper_discrepancy marks relations whose printed form the oracle
// contradicts; such entries carry their measured deviation but do not fail
// a run.
enum class Status { pass, fail, paper_discrepancy };

std::string to_string(Status s);

struct ReportEntry {
  std::string relation_id;
  double max_abs_error = 0.0;
  double tolerance = 0.0;
  Status status = Status::pass;
  std::string notes;
};

// pass iff max_abs_error <= tolerance, else fail.
ReportEntry check_entry(std::string id, double err, double tol, std::string notes = "");

// pass iff within tolerance, else paper_discrepancy (never fail).
ReportEntry discrepancy_entry(std::string id, double err, double tol, std::string notes);

// For violation demonstrations: pass iff measured > threshold.  Stored
// error is max(0, threshold - measured) so the pass rule stays uniform;
// the measured value goes into the notes.
ReportEntry exceeds_entry(std::string id, double measured, double threshold,
                          std::string notes = "");

struct RunConfig {
  std::uint64_t seed = 7;
  int grid = 10;
  double tol_override = -1.0;  // < 0: per-relation defaults
  int max_cutoff = 512;
  std::string format = "json";

  // Applies the STARLAB_MAX_CUTOFF environment cap.
  static RunConfig from_env();
  double tol(double default_tol) const { return tol_override > 0 ? tol_override : default_tol; }
};

struct VerificationReport {
  std::string suite;
  std::vector<ReportEntry> entries;
  RunConfig env;

  void add(ReportEntry e) { entries.push_back(std::move(e)); }
  int fail_count() const;
  int discrepancy_count() const;
  bool all_passed() const { return fail_count() == 0; }
};

inline constexpr int kReportSchemaVersion = 1;

nlohmann::ordered_json report_json(const VerificationReport& report);
nlohmann::ordered_json reports_json(std::span<const VerificationReport> reports);

// format: json | csv | md.  CSV and Markdown are lossless projections of
// the JSON report.
std::string render_reports(std::span<const VerificationReport> reports,
                           const std::string& format);

}  // namespace starlab

#endif
