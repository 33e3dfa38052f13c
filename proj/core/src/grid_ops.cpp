#include "resect/grid_ops.hpp"

#include <cmath>
#include <sstream>

#include "resect/errors.hpp"

namespace resect {

namespace {

// Samples one volume onto an output grid. Every output voxel centre is mapped
// through out_geom.affine to physical space and back into the input's index
// space; out-of-bounds reads contribute 0 (skull-stripped background).
template <typename T>
std::vector<T> sample_onto(const GridGeometry& out_geom, const GridGeometry& in_geom,
                           const std::vector<T>& in_data, SampleMode mode) {
  const Affine4 to_input = in_geom.affine.inverse() * out_geom.affine;
  const auto [nx, ny, nz] = in_geom.shape;

  std::vector<T> out(static_cast<std::size_t>(out_geom.voxel_count()));

  auto fetch = [&](std::int64_t x, std::int64_t y, std::int64_t z) -> double {
    if (x < 0 || y < 0 || z < 0 || x >= nx || y >= ny || z >= nz) return 0.0;
    return static_cast<double>(in_data[static_cast<std::size_t>(in_geom.linear_index(x, y, z))]);
  };

  std::size_t o = 0;
  for (std::int64_t z = 0; z < out_geom.shape[2]; ++z) {
    for (std::int64_t y = 0; y < out_geom.shape[1]; ++y) {
      for (std::int64_t x = 0; x < out_geom.shape[0]; ++x, ++o) {
        const std::array<double, 3> c = to_input.apply(
            {static_cast<double>(x), static_cast<double>(y), static_cast<double>(z)});
        double value = 0.0;
        if (mode == SampleMode::Nearest) {
          value = fetch(std::llround(c[0]), std::llround(c[1]), std::llround(c[2]));
        } else {
          const std::int64_t x0 = static_cast<std::int64_t>(std::floor(c[0]));
          const std::int64_t y0 = static_cast<std::int64_t>(std::floor(c[1]));
          const std::int64_t z0 = static_cast<std::int64_t>(std::floor(c[2]));
          const double fx = c[0] - static_cast<double>(x0);
          const double fy = c[1] - static_cast<double>(y0);
          const double fz = c[2] - static_cast<double>(z0);
          for (int dz = 0; dz < 2; ++dz) {
            const double wz = dz ? fz : 1.0 - fz;
            if (wz == 0.0) continue;
            for (int dy = 0; dy < 2; ++dy) {
              const double wy = dy ? fy : 1.0 - fy;
              if (wy == 0.0) continue;
              for (int dx = 0; dx < 2; ++dx) {
                const double wx = dx ? fx : 1.0 - fx;
                if (wx == 0.0) continue;
                value += wx * wy * wz * fetch(x0 + dx, y0 + dy, z0 + dz);
              }
            }
          }
        }
        out[o] = static_cast<T>(value);
      }
    }
  }
  return out;
}

// Output geometry for a spacing change: same orientation and voxel-(0,0,0)
// origin, columns rescaled to the new spacing. Rescaling by a ratio keeps the
// affine bit-identical when the target equals the source.
GridGeometry retarget_spacing(const GridGeometry& in, const std::array<double, 3>& spacing,
                              const std::array<std::int64_t, 3>& shape) {
  Affine4 affine = in.affine;
  for (int axis = 0; axis < 3; ++axis) {
    const auto a = static_cast<std::size_t>(axis);
    const double ratio = spacing[a] / in.spacing[a];
    for (int r = 0; r < 3; ++r) affine.at(r, axis) *= ratio;
  }
  return GridGeometry(shape, spacing, affine);
}

void require_positive_spacing(const std::array<double, 3>& spacing) {
  for (std::size_t i = 0; i < 3; ++i) {
    if (!(spacing[i] > 0.0)) {
      std::ostringstream os;
      os << "target spacing[" << i << "] = " << spacing[i] << ", must be > 0";
      throw InvalidArgument(os.str());
    }
  }
}

void require_positive_shape(const std::array<std::int64_t, 3>& shape) {
  for (std::size_t i = 0; i < 3; ++i) {
    if (shape[i] < 1) {
      std::ostringstream os;
      os << "target shape[" << i << "] = " << shape[i] << ", must be >= 1";
      throw InvalidArgument(os.str());
    }
  }
}

std::array<std::int64_t, 3> resampled_shape(const GridGeometry& in,
                                            const std::array<double, 3>& target) {
  std::array<std::int64_t, 3> shape{};
  for (std::size_t i = 0; i < 3; ++i) {
    shape[i] = std::max<std::int64_t>(
        1, std::llround(static_cast<double>(in.shape[i]) * in.spacing[i] / target[i]));
  }
  return shape;
}

std::array<double, 3> extent_preserving_spacing(const GridGeometry& in,
                                                const std::array<std::int64_t, 3>& shape) {
  std::array<double, 3> spacing{};
  for (std::size_t i = 0; i < 3; ++i) {
    spacing[i] = in.spacing[i] * (static_cast<double>(in.shape[i]) /
                                  static_cast<double>(shape[i]));
  }
  return spacing;
}

}  // namespace

VoxelGrid resample(const VoxelGrid& grid, const std::array<double, 3>& target_spacing,
                   SampleMode mode) {
  require_positive_spacing(target_spacing);
  const GridGeometry out_geom =
      retarget_spacing(grid.geometry, target_spacing, resampled_shape(grid.geometry, target_spacing));
  if (out_geom == grid.geometry) return grid;
  VoxelGrid out;
  out.geometry = out_geom;
  out.semantics = grid.semantics;
  out.data = sample_onto(out_geom, grid.geometry, grid.data, mode);
  return out;
}

VoxelGrid resize_to(const VoxelGrid& grid, const std::array<std::int64_t, 3>& target_shape,
                    SampleMode mode) {
  require_positive_shape(target_shape);
  const GridGeometry out_geom = retarget_spacing(
      grid.geometry, extent_preserving_spacing(grid.geometry, target_shape), target_shape);
  if (out_geom == grid.geometry) return grid;
  VoxelGrid out;
  out.geometry = out_geom;
  out.semantics = grid.semantics;
  out.data = sample_onto(out_geom, grid.geometry, grid.data, mode);
  return out;
}

VoxelGrid resample_to_reference(const VoxelGrid& moving, const GridGeometry& reference,
                                SampleMode mode) {
  reference.validate();
  if (reference == moving.geometry) return moving;
  VoxelGrid out;
  out.geometry = reference;
  out.semantics = moving.semantics;
  out.data = sample_onto(reference, moving.geometry, moving.data, mode);
  return out;
}

BinaryMask resample_mask(const BinaryMask& mask, const std::array<double, 3>& target_spacing) {
  require_positive_spacing(target_spacing);
  const GridGeometry out_geom =
      retarget_spacing(mask.geometry, target_spacing, resampled_shape(mask.geometry, target_spacing));
  if (out_geom == mask.geometry) return mask;
  BinaryMask out;
  out.geometry = out_geom;
  out.data = sample_onto(out_geom, mask.geometry, mask.data, SampleMode::Nearest);
  return out;
}

BinaryMask resize_mask_to(const BinaryMask& mask, const std::array<std::int64_t, 3>& target_shape) {
  require_positive_shape(target_shape);
  const GridGeometry out_geom = retarget_spacing(
      mask.geometry, extent_preserving_spacing(mask.geometry, target_shape), target_shape);
  if (out_geom == mask.geometry) return mask;
  BinaryMask out;
  out.geometry = out_geom;
  out.data = sample_onto(out_geom, mask.geometry, mask.data, SampleMode::Nearest);
  return out;
}

BinaryMask resample_mask_to_reference(const BinaryMask& mask, const GridGeometry& reference) {
  reference.validate();
  if (reference == mask.geometry) return mask;
  BinaryMask out;
  out.geometry = reference;
  out.data = sample_onto(reference, mask.geometry, mask.data, SampleMode::Nearest);
  return out;
}

namespace {

NormalizeResult normalize_over(const VoxelGrid& grid, const std::vector<std::uint8_t>* region) {
  // region == nullptr means every voxel belongs to the region.
  double sum = 0.0;
  std::int64_t n = 0;
  for (std::size_t i = 0; i < grid.data.size(); ++i) {
    if (region && !(*region)[i]) continue;
    sum += static_cast<double>(grid.data[i]);
    ++n;
  }

  NormalizeResult result;
  result.grid.geometry = grid.geometry;
  result.grid.semantics = Intensity::Normalized;
  result.grid.data.assign(grid.data.size(), 0.0f);

  if (n == 0) {
    result.degenerate = true;
    return result;
  }

  const double mean = sum / static_cast<double>(n);
  double sq = 0.0;
  for (std::size_t i = 0; i < grid.data.size(); ++i) {
    if (region && !(*region)[i]) continue;
    const double d = static_cast<double>(grid.data[i]) - mean;
    sq += d * d;
  }
  const double std_dev = std::sqrt(sq / static_cast<double>(n));

  if (std_dev == 0.0) {
    result.degenerate = true;
    return result;  // zero variance: all zeros over the region
  }

  for (std::size_t i = 0; i < grid.data.size(); ++i) {
    if (region && !(*region)[i]) continue;
    result.grid.data[i] =
        static_cast<float>((static_cast<double>(grid.data[i]) - mean) / std_dev);
  }
  return result;
}

}  // namespace

NormalizeResult zero_mean_normalize(const VoxelGrid& grid, const BinaryMask& region) {
  if (!same_grid(grid.geometry, region.geometry)) {
    throw IncompatibleGrids("normalization region does not share the grid's geometry");
  }
  return normalize_over(grid, &region.data);
}

NormalizeResult zero_mean_normalize(const VoxelGrid& grid, NormalizeRegion region) {
  if (region == NormalizeRegion::WholeGrid) {
    return normalize_over(grid, nullptr);
  }
  std::vector<std::uint8_t> nonzero(grid.data.size());
  for (std::size_t i = 0; i < grid.data.size(); ++i) {
    nonzero[i] = grid.data[i] != 0.0f ? 1 : 0;
  }
  return normalize_over(grid, &nonzero);
}

VoxelGrid apply_mask(const VoxelGrid& grid, const BinaryMask& brain) {
  if (!same_grid(grid.geometry, brain.geometry)) {
    throw IncompatibleGrids("brain mask does not share the grid's geometry");
  }
  VoxelGrid out = grid;
  for (std::size_t i = 0; i < out.data.size(); ++i) {
    if (!brain.data[i]) out.data[i] = 0.0f;
  }
  return out;
}

double voxel_volume_ml(const GridGeometry& geometry) {
  return geometry.spacing[0] * geometry.spacing[1] * geometry.spacing[2] / 1000.0;
}

}  // namespace resect
