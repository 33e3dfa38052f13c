// nifti.hpp
// NIfTI-1 single-file (.nii / .nii.gz) reader and writer. Little- and
// big-endian files are accepted on read; writes emit little-endian "n+1"
// files with the payload at offset 352. Gzip compression is keyed off the
// ".gz" suffix.

#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "resect/grid.hpp"

namespace resect {
namespace nifti {

enum class DataType : std::int16_t {
  Uint8 = 2,
  Int16 = 4,
  Int32 = 8,
  Float32 = 16,
  Float64 = 64
};

int bytes_per_voxel(DataType dt);

// The 348-byte NIfTI-1 header, host-endian. Only the fields this toolkit
// consumes are kept; everything else round-trips as zeros.
struct Header {
  std::int32_t sizeof_hdr = 348;
  std::array<std::int16_t, 8> dim{};
  std::int16_t datatype = 0;
  std::int16_t bitpix = 0;
  std::array<float, 8> pixdim{};
  float vox_offset = 352.0f;
  float scl_slope = 0.0f;
  float scl_inter = 0.0f;
  std::int16_t qform_code = 0;
  std::int16_t sform_code = 0;
  float quatern_b = 0.0f, quatern_c = 0.0f, quatern_d = 0.0f;
  float qoffset_x = 0.0f, qoffset_y = 0.0f, qoffset_z = 0.0f;
  std::array<float, 4> srow_x{}, srow_y{}, srow_z{};
  std::array<char, 4> magic{};  // "n+1" or "ni1", NUL-terminated

  bool single_file() const;
};

// Decodes a 348-byte header blob, byte-swapping when sizeof_hdr announces a
// foreign byte order. Throws NotNifti when the blob cannot be a NIfTI-1
// header. `swapped` reports whether swapping was applied.
Header decode_header(const std::array<std::uint8_t, 348>& raw, bool& swapped);

// Diagnostics collected while reading (sform/qform disagreement and similar).
struct ReadInfo {
  Header header;
  bool byte_swapped = false;
  std::vector<std::string> warnings;
};

}  // namespace nifti

// Reads a scalar volume. Intensity scaling (scl_slope/scl_inter) is applied
// when slope != 0; geometry comes from the sform when set, else the qform,
// else a pixdim diagonal.
VoxelGrid read_volume(const std::filesystem::path& path);
VoxelGrid read_volume(const std::filesystem::path& path, nifti::ReadInfo& info);

// Reads a mask: values > 0.5 after scaling become 1, everything else 0.
BinaryMask read_mask(const std::filesystem::path& path);
BinaryMask read_mask(const std::filesystem::path& path, nifti::ReadInfo& info);

// Writes a volume in the requested on-disk type. Float data written to an
// integer type is rounded to the nearest representable value.
void write_volume(const VoxelGrid& grid, const std::filesystem::path& path,
                  nifti::DataType dtype = nifti::DataType::Float32);

// Masks are written as uint8 {0,1}.
void write_mask(const BinaryMask& mask, const std::filesystem::path& path);

}  // namespace resect
