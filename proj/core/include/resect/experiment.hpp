// experiment.hpp
// Experiment orchestration: per-patient prediction -> post-processing ->
// scoring, grouped per validation fold and held-out test set, with
// fold-pooled statistics. Patients run concurrently up to a worker count;
// the aggregation is index-ordered so results are identical for any count.

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "resect/fold_plan.hpp"
#include "resect/manifest.hpp"
#include "resect/metrics.hpp"
#include "resect/postprocess.hpp"

namespace resect {

enum class PredictionSource { ExternalMaps, BaselineSegmenter };

struct ExperimentConfig {
  char input_config = 'B';
  PostprocessParams post;
  double dice_floor = kDefaultDiceFloor;
  DetectionRule detection_rule = DetectionRule::DiceFloor;
  PredictionSource prediction_source = PredictionSource::ExternalMaps;
  std::string experiment_label = "experiment";
  std::string architecture_label = "external";
  int workers = 1;
  std::uint64_t seed = 0;

  void validate() const;
};

// Flat key=value config file (threshold=0.5, connectivity=26, ...). Unknown
// keys raise invalid-argument so typos do not silently fall back to defaults.
ExperimentConfig load_experiment_config(const std::filesystem::path& path);
void apply_config_line(ExperimentConfig& cfg, const std::string& key, const std::string& value);

struct PatientOutcome {
  std::string patient_id;
  std::string hospital;
  std::optional<int> fold;
  bool is_test = false;
  bool failed = false;
  std::string error;

  std::optional<double> dice;
  double gt_volume_ml = 0.0;
  double pred_volume_ml = 0.0;
  DetectionStatus status = DetectionStatus::TN;
  Resection gt_class = Resection::GTR;
  Resection predicted_class = Resection::GTR;
};

// Metrics over one patient group (a fold, the test set, or the whole cohort).
struct CohortMetrics {
  GroupStat dsc_p;
  GroupStat dsc_tp;
  ConfusionCounts counts;
  DetectionMetrics detection;
  std::int64_t scored = 0;
  std::int64_t failed = 0;
};

// A fold-pooled table cell: stat over the folds where the metric was defined,
// with the number of excluded (undefined) folds reported alongside.
struct PooledCell {
  std::optional<PooledStat> stat;
  std::int64_t excluded_folds = 0;
};

// Pooled values are kept in percent, matching the reported tables.
struct PooledColumns {
  PooledCell dsc_p, dsc_tp;
  PooledCell recall, precision, f1;
  PooledCell sensitivity, specificity, balanced_accuracy;
};

struct MetricReport {
  std::string experiment_label;
  std::string architecture_label;
  char input_config = 'B';
  PostprocessParams post;
  double dice_floor = kDefaultDiceFloor;
  DetectionRule detection_rule = DetectionRule::DiceFloor;

  std::vector<PatientOutcome> patients;  // manifest order
  std::vector<std::pair<int, CohortMetrics>> folds;  // validation, by fold id
  std::optional<CohortMetrics> test;
  std::optional<CohortMetrics> whole_cohort;  // only when no fold plan is used
  PooledColumns pooled;  // across validation folds
};

// Runs the configured experiment over the cohort. Prediction maps come from
// the manifest's pred_<fold> column for validation patients, the average of
// all provided maps for test patients, or the built-in baseline segmenter.
// Per-patient failures are recorded and the run continues; a cohort where
// every patient failed raises experiment-error.
MetricReport run_experiment(const ExperimentConfig& cfg, const CohortManifest& cohort,
                            const std::optional<FoldPlan>& plan = std::nullopt);

// Scores one patient group; shared by run_experiment and report rebuilding.
CohortMetrics score_group(const std::vector<PatientOutcome>& group, double cutoff_ml,
                          double dice_floor, DetectionRule rule);

PooledColumns pool_across_folds(const std::vector<std::pair<int, CohortMetrics>>& folds);

}  // namespace resect
