// grid.hpp
// Dense volumetric containers: scalar grids for MR intensities and
// probability maps, binary masks for annotations and predictions.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "resect/geometry.hpp"

namespace resect {

enum class Intensity { Raw, Normalized, Probability };

// 3D scalar volume. Data is stored x-fastest, matching GridGeometry indexing.
struct VoxelGrid {
  GridGeometry geometry;
  std::vector<float> data;
  Intensity semantics = Intensity::Raw;

  VoxelGrid() = default;
  VoxelGrid(GridGeometry geom, Intensity sem, float fill = 0.0f);

  float at(std::int64_t x, std::int64_t y, std::int64_t z) const {
    return data[static_cast<std::size_t>(geometry.linear_index(x, y, z))];
  }
  float& at(std::int64_t x, std::int64_t y, std::int64_t z) {
    return data[static_cast<std::size_t>(geometry.linear_index(x, y, z))];
  }

  // Checks the size/shape agreement and, for probability grids, the [0,1]
  // value range. Throws InvalidArgument on violation.
  void validate() const;
};

// 3D {0,1} volume sharing the VoxelGrid geometry conventions.
struct BinaryMask {
  GridGeometry geometry;
  std::vector<std::uint8_t> data;

  BinaryMask() = default;
  explicit BinaryMask(GridGeometry geom, std::uint8_t fill = 0);

  std::uint8_t at(std::int64_t x, std::int64_t y, std::int64_t z) const {
    return data[static_cast<std::size_t>(geometry.linear_index(x, y, z))];
  }
  std::uint8_t& at(std::int64_t x, std::int64_t y, std::int64_t z) {
    return data[static_cast<std::size_t>(geometry.linear_index(x, y, z))];
  }

  std::int64_t foreground_count() const;

  void validate() const;
};

// The MR sequence roles a patient record can provide.
enum class SequenceRole {
  EpmrT1ce,   // early post-operative contrast-enhanced T1
  EpmrT1w,    // early post-operative T1
  EpmrFlair,  // early post-operative FLAIR
  PreT1ce,    // pre-operative contrast-enhanced T1
  PreLabel    // pre-operative tumor annotation
};

const char* to_string(SequenceRole role);

// Input sequence combinations A-E. A = {EPMR T1w-CE}; B adds EPMR T1w; C adds
// FLAIR; D = B plus pre-operative T1w-CE and label; E = C plus the same.
struct InputConfiguration {
  char label = 'A';
  std::vector<SequenceRole> sequences;

  static InputConfiguration preset(char label);

  std::size_t sequence_count() const { return sequences.size(); }
  bool requires(SequenceRole role) const;
};

}  // namespace resect
