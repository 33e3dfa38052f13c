// phantom.hpp
// Seeded synthetic cohort generator: ellipsoidal brain phantoms with
// rim-fragment tumor blobs bright on T1w-CE only, blood mimics bright on both
// T1w-CE and T1w, and additive Gaussian noise. Intensity levels are separated
// far beyond the noise so an Otsu split always lands in the empty gap between
// tissue classes. The generator is byte-deterministic for a given seed.

#pragma once

#include <array>
#include <cstdint>
#include <filesystem>

#include "resect/manifest.hpp"

namespace resect {

struct PhantomParams {
  std::array<std::int64_t, 3> shape{64, 64, 56};
  std::array<double, 3> spacing{1.0, 1.0, 1.0};
  double background_intensity = 100.0;
  double lesion_intensity = 300.0;
  double noise_sigma = 4.0;
  int max_tumor_fragments = 3;  // per patient, drawn uniformly from 0..max
  std::array<double, 2> fragment_radius_range{4.0, 6.0};  // voxels
  std::array<int, 2> blood_count_range{1, 2};
  int validation_hospitals = 4;  // plus one held-out test hospital

  void validate() const;
};

struct PhantomCohort {
  CohortManifest manifest;
  std::filesystem::path manifest_path;
  std::filesystem::path fold_plan_path;
};

// Writes n_patients phantom cases (t1ce/t1w/brain/gt volumes as .nii.gz), a
// manifest referencing them with declared ground-truth volumes, and a fold
// plan over the synthetic hospitals. Same seed, same bytes.
PhantomCohort generate_phantom_cohort(int n_patients, std::uint64_t seed,
                                      const std::filesystem::path& out_dir,
                                      const PhantomParams& params = {});

}  // namespace resect
