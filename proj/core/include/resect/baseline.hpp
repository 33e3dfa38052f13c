// baseline.hpp
// Dependency-free reference segmenter: Otsu thresholding of the T1w-CE scan
// inside the brain, with blood ruled out by T1w hyperintensity (a second
// Otsu split). Lets the full pipeline and evaluation run without a network.

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "resect/grid.hpp"

namespace resect {

// 256-bin histogram over a region, with the value range mapped linearly onto
// the bins: bin(v) = floor(255 * (v - min) / (max - min)), clamped.
struct IntensityHistogram {
  std::array<std::int64_t, 256> bins{};
  double min_value = 0.0;
  double max_value = 0.0;
  std::int64_t total = 0;

  static IntensityHistogram from_region(const VoxelGrid& grid, const BinaryMask& region);

  int bin_of(double value) const;

  // Fewer than two distinct populated bins: Otsu cannot split.
  bool degenerate() const;
};

// Between-class-variance maximizing threshold. The returned index t assigns
// bins >= t to the upper class; ties resolve to the smallest t. Throws
// DegenerateHistogram when no split exists.
int otsu_threshold(const IntensityHistogram& hist);

struct BaselineResult {
  VoxelGrid probability;  // hard 0/1 values in a probability container
  std::vector<std::string> warnings;
};

// Candidates are brain voxels at or above the T1w-CE Otsu split; candidates
// also at or above the T1w split are discarded as blood. A flat T1w-CE
// histogram yields an empty map; a flat T1w merely disables the exclusion.
BaselineResult baseline_segment(const VoxelGrid& t1ce, const VoxelGrid& t1w,
                                const BinaryMask& brain);

}  // namespace resect
