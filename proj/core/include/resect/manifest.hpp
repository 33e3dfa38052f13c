// manifest.hpp
// Cohort manifest: one CSV row per patient with fixed column names
// (patient_id, hospital, t1ce, t1w, flair, pre_t1ce, pre_label, gt,
// brain_mask, pred_0..pred_4). Relative paths resolve against the manifest's
// directory. Optional columns: gt_volume_ml (declared ground-truth volume)
// and acquisition_delay_days (metadata only).

#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "resect/grid.hpp"
#include "resect/postprocess.hpp"

namespace resect {

struct PatientRecord {
  std::string patient_id;
  std::string hospital;
  std::filesystem::path t1ce, t1w, flair, pre_t1ce, pre_label;
  std::filesystem::path gt, brain_mask;
  std::vector<std::filesystem::path> predictions;  // pred_0..pred_4, may be empty
  std::optional<int> fold;
  std::optional<double> declared_gt_volume_ml;
  std::optional<double> acquisition_delay_days;

  const std::filesystem::path& sequence_path(SequenceRole role) const;
};

struct HospitalStats {
  std::int64_t patients = 0;
  std::int64_t rt = 0;   // declared gt volume >= cutoff
  std::int64_t gtr = 0;  // declared gt volume < cutoff
  std::int64_t undeclared = 0;

  // RT percentage over declared patients, NaN when none are declared.
  double rt_ratio_percent() const;
};

struct CohortManifest {
  std::filesystem::path source;  // manifest file path
  std::vector<PatientRecord> patients;

  std::map<std::string, HospitalStats> hospital_stats(double cutoff_ml = kGtrCutoffMl) const;
  std::vector<std::string> hospitals() const;

  const PatientRecord* find(const std::string& patient_id) const;
};

// Parses and validates a manifest. Duplicate patient ids and missing required
// columns raise manifest-error. An empty cohort is valid (callers decide).
CohortManifest load_manifest(const std::filesystem::path& path);

void save_manifest(const CohortManifest& manifest, const std::filesystem::path& path);

}  // namespace resect
