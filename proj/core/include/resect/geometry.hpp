// geometry.hpp
// Voxel-grid geometry: shape, spacing and the index-to-physical affine.
// Index convention is (x, y, z) with x fastest-varying in memory; physical
// coordinates are millimetres. The affine maps homogeneous voxel indices
// (i, j, k, 1) to physical positions, and its translation column is the
// physical centre of voxel (0, 0, 0).

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

namespace resect {

// Row-major 4x4 homogeneous transform.
struct Affine4 {
  std::array<double, 16> m{1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1};

  double& at(int row, int col) { return m[static_cast<std::size_t>(row * 4 + col)]; }
  double at(int row, int col) const { return m[static_cast<std::size_t>(row * 4 + col)]; }

  static Affine4 identity() { return Affine4{}; }

  // Diagonal scaling plus translation, the layout of a de-facto axis-aligned scan.
  static Affine4 scaling(const std::array<double, 3>& scale,
                         const std::array<double, 3>& translation);

  Affine4 operator*(const Affine4& rhs) const;

  // Applies the transform to a 3-vector with implicit homogeneous 1.
  std::array<double, 3> apply(const std::array<double, 3>& p) const;

  // Gauss-Jordan inverse. Throws InvalidGeometry when singular.
  Affine4 inverse() const;

  bool invertible() const;

  bool operator==(const Affine4& rhs) const { return m == rhs.m; }
};

struct GridGeometry {
  std::array<std::int64_t, 3> shape{1, 1, 1};  // voxels per axis
  std::array<double, 3> spacing{1.0, 1.0, 1.0};  // mm per voxel
  Affine4 affine;  // voxel index -> physical mm

  GridGeometry() = default;
  GridGeometry(std::array<std::int64_t, 3> shape_, std::array<double, 3> spacing_,
               Affine4 affine_);

  // Axis-aligned geometry: affine = diag(spacing) with the given origin.
  static GridGeometry axis_aligned(std::array<std::int64_t, 3> shape,
                                   std::array<double, 3> spacing,
                                   std::array<double, 3> origin = {0.0, 0.0, 0.0});

  std::int64_t voxel_count() const { return shape[0] * shape[1] * shape[2]; }

  std::int64_t linear_index(std::int64_t x, std::int64_t y, std::int64_t z) const {
    return x + shape[0] * (y + shape[1] * z);
  }

  std::array<double, 3> voxel_center(std::int64_t x, std::int64_t y,
                                     std::int64_t z) const {
    return affine.apply({static_cast<double>(x), static_cast<double>(y),
                         static_cast<double>(z)});
  }

  // Unit direction column i of the affine (column scaled back by spacing).
  std::array<double, 3> direction(int axis) const;

  // Physical centre of voxel (0,0,0).
  std::array<double, 3> origin() const {
    return {affine.at(0, 3), affine.at(1, 3), affine.at(2, 3)};
  }

  // Shape, spacing and affine all equal bit-for-bit.
  bool operator==(const GridGeometry& rhs) const {
    return shape == rhs.shape && spacing == rhs.spacing && affine == rhs.affine;
  }

  // Validates shape >= 1, spacing > 0, affine column norms consistent with
  // spacing (1e-6 relative) and invertibility. Throws InvalidGeometry.
  void validate() const;
};

// Equality up to small numeric noise; used at operation boundaries where two
// volumes must live on the same grid (header round-trips pass through float32).
bool same_grid(const GridGeometry& a, const GridGeometry& b, double tol = 1e-3);

}  // namespace resect
