// grid_ops.hpp
// Pre-/post-inference grid operations: spacing resample, shape resize,
// zero-mean normalization, skull-strip masking and reference-grid alignment.
// All operations are pure; inputs are never modified.

#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "resect/grid.hpp"

namespace resect {

enum class SampleMode {
  Trilinear,  // intensity and probability grids
  Nearest     // masks and labels; emits only values present in the input
};

// Resamples to the target spacing. Output shape per axis is
// round(shape * spacing / target), at least 1; orientation and the physical
// position of voxel (0,0,0) are preserved. Out-of-bounds samples read 0.
// Target spacing equal to the source spacing returns a bit-identical copy.
VoxelGrid resample(const VoxelGrid& grid, const std::array<double, 3>& target_spacing,
                   SampleMode mode);

// Resamples to an explicit voxel count per axis. Spacing is rescaled so
// shape*spacing stays invariant per axis (the physical extent is preserved).
VoxelGrid resize_to(const VoxelGrid& grid, const std::array<std::int64_t, 3>& target_shape,
                    SampleMode mode);

// Samples `moving` onto the reference grid: each reference voxel centre is
// mapped through reference.affine and read from `moving` via its inverse
// affine. Reference equal to the moving geometry is a bit-exact copy.
VoxelGrid resample_to_reference(const VoxelGrid& moving, const GridGeometry& reference,
                                SampleMode mode);

// Nearest-mode mask variants; the {0,1} value set is closed under these.
BinaryMask resample_mask(const BinaryMask& mask, const std::array<double, 3>& target_spacing);
BinaryMask resize_mask_to(const BinaryMask& mask, const std::array<std::int64_t, 3>& target_shape);
BinaryMask resample_mask_to_reference(const BinaryMask& mask, const GridGeometry& reference);

struct NormalizeResult {
  VoxelGrid grid;
  bool degenerate = false;  // region had zero variance (or was empty)
};

enum class NormalizeRegion {
  WholeGrid,
  NonzeroVoxels  // default when no brain mask is available
};

// Shifts and scales so the region has mean 0 and population std 1; voxels
// outside the region are set to 0. A zero-variance region yields an all-zero
// output flagged degenerate instead of an error.
NormalizeResult zero_mean_normalize(const VoxelGrid& grid, const BinaryMask& region);
NormalizeResult zero_mean_normalize(const VoxelGrid& grid,
                                    NormalizeRegion region = NormalizeRegion::NonzeroVoxels);

// Skull-stripping: keeps the grid where brain=1, zeroes elsewhere.
VoxelGrid apply_mask(const VoxelGrid& grid, const BinaryMask& brain);

// Volume of one voxel in millilitres: spacing product / 1000. Single source
// of truth for every ml threshold downstream.
double voxel_volume_ml(const GridGeometry& geometry);

}  // namespace resect
