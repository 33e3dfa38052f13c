// fold_plan.hpp
// Hospital-stratified cross-validation plan: each fold names the hospitals
// held out for validation, plus a disjoint held-out test hospital set.
// Plans are data, parsed from a flat key=value file:
//
//   fold.0 = STO
//   fold.1 = GRO, MIL, UTR
//   test   = AMS

#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "resect/manifest.hpp"

namespace resect {

struct FoldPlan {
  std::vector<std::vector<std::string>> validation_hospitals;  // index = fold id
  std::vector<std::string> test_hospitals;

  std::size_t fold_count() const { return validation_hospitals.size(); }

  // Pairwise disjointness of all hospital sets. Throws PlanError.
  void validate() const;
};

FoldPlan load_fold_plan(const std::filesystem::path& path);
FoldPlan parse_fold_plan(const std::string& text);

// A patient's place in the cross-validation protocol.
struct FoldAssignment {
  std::optional<int> fold;  // validation fold id, empty for test patients
  bool is_test = false;
};

struct FoldSummary {
  std::vector<std::int64_t> validation_counts;  // per fold
  std::vector<std::int64_t> train_counts;       // per fold: everyone else but test
  std::int64_t test_count = 0;
};

// Labels every patient with its hospital's fold (or the test set). A cohort
// hospital missing from the plan raises plan-error.
std::map<std::string, FoldAssignment> assign_folds(const CohortManifest& cohort,
                                                   const FoldPlan& plan);

FoldSummary summarize_folds(const CohortManifest& cohort, const FoldPlan& plan);

}  // namespace resect
