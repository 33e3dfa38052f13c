// postprocess.hpp
// Post-inference pipeline: probability-map binarization, connected-component
// noise filtering, residual-volume computation, GTR/RT classification,
// cross-model ensembling and extent-of-resection arithmetic.

#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "resect/grid.hpp"

namespace resect {

inline constexpr double kDefaultThreshold = 0.5;
inline constexpr int kDefaultConnectivity = 26;
inline constexpr int kDefaultMinComponentVoxels = 20;
inline constexpr double kGtrCutoffMl = 0.175;

struct ComponentInfo {
  std::int64_t voxel_count = 0;
  double volume_ml = 0.0;
  std::array<std::int64_t, 3> bbox_min{0, 0, 0};
  std::array<std::int64_t, 3> bbox_max{0, 0, 0};  // inclusive
};

// Labeling of a binary mask. Labels are consecutive 1..K with 0 background,
// ordered by each component's minimum linear voxel index.
struct ComponentLabeling {
  GridGeometry geometry;
  std::vector<std::uint32_t> labels;
  std::vector<ComponentInfo> components;  // components[k] describes label k+1
  int connectivity = kDefaultConnectivity;

  std::size_t component_count() const { return components.size(); }
};

enum class Resection { GTR, RT };

const char* to_string(Resection r);

struct ResectionVerdict {
  double residual_volume_ml = 0.0;
  Resection classification = Resection::GTR;
  double cutoff_ml = kGtrCutoffMl;
};

// Thresholds a probability map: voxel = 1 iff prob >= threshold. The
// inclusive rule keeps threshold 1.0 attainable.
BinaryMask binarize(const VoxelGrid& prob, double threshold);

// Labels foreground components under 6-, 18- or 26-connectivity.
ComponentLabeling connected_components(const BinaryMask& mask, int connectivity);

// Keeps exactly the components with voxel_count >= min_voxels.
BinaryMask filter_small_components(const ComponentLabeling& labeling,
                                   int min_voxels = kDefaultMinComponentVoxels);

// Foreground voxel count times voxel_volume_ml.
double residual_volume_ml(const BinaryMask& mask);

// GTR iff volume < cutoff; the boundary value itself is residual tumor.
ResectionVerdict classify_resection(double volume_ml, double cutoff_ml = kGtrCutoffMl);

// Voxelwise arithmetic mean of probability maps on one shared grid.
VoxelGrid ensemble_average(const std::vector<VoxelGrid>& probs);

struct EorResult {
  double eor = 0.0;   // (preop - residual) / preop, clamped to [0,1]
  bool clamped = false;
};

// Extent of resection. Residual above the pre-operative volume clamps to 0
// and flags the event rather than erroring; registration noise can cause it.
EorResult compute_eor(double preop_volume_ml, double residual_volume_ml);

struct PostprocessParams {
  double threshold = kDefaultThreshold;
  int connectivity = kDefaultConnectivity;
  int min_voxels = kDefaultMinComponentVoxels;
  double cutoff_ml = kGtrCutoffMl;
};

struct PostprocessResult {
  BinaryMask mask;
  ResectionVerdict verdict;
};

// binarize -> connected_components -> filter_small_components ->
// residual_volume_ml -> classify_resection, in that order.
PostprocessResult run_postprocess(const VoxelGrid& prob, const PostprocessParams& params = {});

}  // namespace resect
