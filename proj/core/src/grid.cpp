#include "resect/grid.hpp"

#include <algorithm>
#include <sstream>

#include "resect/errors.hpp"

namespace resect {

VoxelGrid::VoxelGrid(GridGeometry geom, Intensity sem, float fill)
    : geometry(std::move(geom)),
      data(static_cast<std::size_t>(geometry.voxel_count()), fill),
      semantics(sem) {}

void VoxelGrid::validate() const {
  geometry.validate();
  if (data.size() != static_cast<std::size_t>(geometry.voxel_count())) {
    std::ostringstream os;
    os << "data has " << data.size() << " elements, geometry expects "
       << geometry.voxel_count();
    throw InvalidArgument(os.str());
  }
  if (semantics == Intensity::Probability) {
    for (float v : data) {
      if (!(v >= 0.0f && v <= 1.0f)) {
        std::ostringstream os;
        os << "probability grid contains value " << v << " outside [0,1]";
        throw InvalidArgument(os.str());
      }
    }
  }
}

BinaryMask::BinaryMask(GridGeometry geom, std::uint8_t fill)
    : geometry(std::move(geom)),
      data(static_cast<std::size_t>(geometry.voxel_count()), fill) {}

std::int64_t BinaryMask::foreground_count() const {
  return std::count(data.begin(), data.end(), std::uint8_t{1});
}

void BinaryMask::validate() const {
  geometry.validate();
  if (data.size() != static_cast<std::size_t>(geometry.voxel_count())) {
    std::ostringstream os;
    os << "data has " << data.size() << " elements, geometry expects "
       << geometry.voxel_count();
    throw InvalidArgument(os.str());
  }
  for (std::uint8_t v : data) {
    if (v > 1) {
      throw InvalidArgument("mask values must be exactly 0 or 1");
    }
  }
}

const char* to_string(SequenceRole role) {
  switch (role) {
    case SequenceRole::EpmrT1ce: return "EPMR-T1wCE";
    case SequenceRole::EpmrT1w: return "EPMR-T1w";
    case SequenceRole::EpmrFlair: return "EPMR-FLAIR";
    case SequenceRole::PreT1ce: return "PRE-T1wCE";
    case SequenceRole::PreLabel: return "PRE-label";
  }
  return "unknown";
}

InputConfiguration InputConfiguration::preset(char label) {
  InputConfiguration cfg;
  cfg.label = label;
  switch (label) {
    case 'A':
      cfg.sequences = {SequenceRole::EpmrT1ce};
      break;
    case 'B':
      cfg.sequences = {SequenceRole::EpmrT1ce, SequenceRole::EpmrT1w};
      break;
    case 'C':
      cfg.sequences = {SequenceRole::EpmrT1ce, SequenceRole::EpmrT1w,
                       SequenceRole::EpmrFlair};
      break;
    case 'D':
      cfg.sequences = {SequenceRole::EpmrT1ce, SequenceRole::EpmrT1w,
                       SequenceRole::PreT1ce, SequenceRole::PreLabel};
      break;
    case 'E':
      cfg.sequences = {SequenceRole::EpmrT1ce, SequenceRole::EpmrT1w,
                       SequenceRole::EpmrFlair, SequenceRole::PreT1ce,
                       SequenceRole::PreLabel};
      break;
    default: {
      std::ostringstream os;
      os << "input configuration label '" << label << "' is not one of A-E";
      throw InvalidArgument(os.str());
    }
  }
  return cfg;
}

bool InputConfiguration::requires(SequenceRole role) const {
  return std::find(sequences.begin(), sequences.end(), role) != sequences.end();
}

}  // namespace resect
