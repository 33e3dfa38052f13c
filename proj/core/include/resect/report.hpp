// report.hpp
// Report emission: per-patient CSV plus cohort tables (CSV and Markdown) in
// the published layout, with mean+-std cells at two decimals. Cohort tables
// are a pure function of the per-patient CSV and can be rebuilt from it.

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "resect/experiment.hpp"

namespace resect {

// "5.00+-5.00" (ASCII +-), bare mean when n == 1, "n/a (n=0)" when empty.
std::string format_cell(const PooledCell& cell);
std::string format_group_cell(const GroupStat& stat);

enum class ReportFormat { Csv, Markdown };

std::vector<ReportFormat> parse_formats(const std::string& comma_separated);

struct EmittedReport {
  std::filesystem::path per_patient_csv;
  std::vector<std::filesystem::path> cohort_tables;
};

// Writes per_patient.csv and cohort_metrics.{csv,md} under out_dir.
EmittedReport emit_report(const MetricReport& report, const std::filesystem::path& out_dir,
                          const std::vector<ReportFormat>& formats = {ReportFormat::Csv,
                                                                      ReportFormat::Markdown});

// Rebuilds fold/test/pooled tables from a previously emitted per-patient CSV.
// Cells are recomputed from scratch; byte-identical to the original run.
MetricReport rebuild_report(const std::filesystem::path& per_patient_csv, double cutoff_ml,
                            double dice_floor, DetectionRule rule);

std::string render_cohort_csv(const MetricReport& report);
std::string render_cohort_markdown(const MetricReport& report);
std::string render_per_patient_csv(const MetricReport& report);

}  // namespace resect
