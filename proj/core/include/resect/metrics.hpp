// metrics.hpp
// Validation metric battery: voxel-wise Dice/Jaccard, patient-wise detection
// and GTR classification confusion metrics, fold-pooled statistics and
// inter-rater consensus scoring. Undefined values are first-class
// (std::nullopt), distinct from zero, and excluded from pooling.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "resect/grid.hpp"
#include "resect/postprocess.hpp"

namespace resect {

inline constexpr double kDefaultDiceFloor = 0.01;

// 2|A n B| / (|A| + |B|). Undefined when both masks are empty (a gross total
// resection has no overlap to measure).
std::optional<double> dice(const BinaryMask& gt, const BinaryMask& pred);

// |A n B| / |A u B|; undefined when both masks are empty.
std::optional<double> jaccard(const BinaryMask& gt, const BinaryMask& pred);

// The algebraic identity J = D / (2 - D).
double jaccard_from_dice(double d);

enum class DetectionStatus { TP, TN, FP, FN };

const char* to_string(DetectionStatus s);
std::optional<DetectionStatus> detection_status_from_string(const std::string& s);

// Which rule decides patient-wise true positives: the dice-floor reading
// (volumes plus a minimum Dice) or the volume-only reading.
enum class DetectionRule { DiceFloor, VolumeOnly };

// Patient-wise status from ground-truth volume, predicted volume and Dice.
//   TP: gt >= cutoff and pred >= cutoff (and dice >= floor under DiceFloor)
//   TN: gt < cutoff and pred < cutoff
//   FN: gt >= cutoff, prediction missed (volume or floor)
//   FP: gt < cutoff and pred >= cutoff
DetectionStatus patient_detection_status(double gt_volume_ml, double pred_volume_ml,
                                         std::optional<double> dice_score,
                                         double cutoff_ml = kGtrCutoffMl,
                                         double dice_floor = kDefaultDiceFloor,
                                         DetectionRule rule = DetectionRule::DiceFloor);

struct ConfusionCounts {
  std::int64_t tp = 0, tn = 0, fp = 0, fn = 0;

  std::int64_t total() const { return tp + tn + fp + fn; }
  void add(DetectionStatus s);
};

struct DetectionMetrics {
  std::optional<double> recall;       // sensitivity, tp / (tp + fn)
  std::optional<double> precision;    // tp / (tp + fp)
  std::optional<double> specificity;  // tn / (tn + fp)
  std::optional<double> f1;
  std::optional<double> balanced_accuracy;
};

DetectionMetrics detection_metrics(const ConfusionCounts& counts);

// The two scalar identities the tables are built on, usable directly on
// printed percentage values.
double balanced_accuracy(double sensitivity, double specificity);
double f1_score(double recall, double precision);

struct PooledStat {
  double mean = 0.0;
  double std = 0.0;  // population standard deviation
  std::int64_t n = 0;
};

// Mean and population std over per-fold metric values. Empty input is an
// invalid-argument; use GroupStat for possibly-empty patient groups.
PooledStat pooled_stats(const std::vector<double>& per_fold_values);

// A pooled statistic over a patient group that may be empty (n = 0 means the
// value is undefined and must be reported as such, never as zero).
struct GroupStat {
  std::optional<PooledStat> stat;
  std::int64_t n = 0;
};

// One patient's scoring inputs, as consumed by the cohort-level metrics.
struct PatientScore {
  double gt_volume_ml = 0.0;
  double pred_volume_ml = 0.0;
  std::optional<double> dice;
};

struct GroupDice {
  GroupStat dsc_p;   // patients with residual tumor per ground truth
  GroupStat dsc_tp;  // patients detected as true positives
};

// Mean Dice over the positive and true-positive patient groups.
GroupDice group_dice(const std::vector<PatientScore>& patients,
                     double cutoff_ml = kGtrCutoffMl,
                     double dice_floor = kDefaultDiceFloor,
                     DetectionRule rule = DetectionRule::DiceFloor);

// Strict-majority vote across raters: a voxel is foreground iff more than
// half of the annotations mark it. Ties (exactly half) are background.
BinaryMask consensus_vote(const std::vector<BinaryMask>& annotations);

struct RaterScore {
  std::string rater;
  std::optional<double> jaccard;
};

// One Jaccard per named annotation against the chosen reference.
std::vector<RaterScore> interrater_scores(
    const std::vector<std::pair<std::string, BinaryMask>>& annotations,
    const BinaryMask& reference);

}  // namespace resect
