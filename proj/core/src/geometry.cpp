#include "resect/geometry.hpp"

#include <cmath>
#include <sstream>

#include "resect/errors.hpp"

namespace resect {

Affine4 Affine4::scaling(const std::array<double, 3>& scale,
                         const std::array<double, 3>& translation) {
  Affine4 a;
  a.at(0, 0) = scale[0];
  a.at(1, 1) = scale[1];
  a.at(2, 2) = scale[2];
  a.at(0, 3) = translation[0];
  a.at(1, 3) = translation[1];
  a.at(2, 3) = translation[2];
  return a;
}

Affine4 Affine4::operator*(const Affine4& rhs) const {
  Affine4 out;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      double sum = 0.0;
      for (int k = 0; k < 4; ++k) sum += at(r, k) * rhs.at(k, c);
      out.at(r, c) = sum;
    }
  }
  return out;
}

std::array<double, 3> Affine4::apply(const std::array<double, 3>& p) const {
  std::array<double, 3> out{};
  for (int r = 0; r < 3; ++r) {
    out[static_cast<std::size_t>(r)] =
        at(r, 0) * p[0] + at(r, 1) * p[1] + at(r, 2) * p[2] + at(r, 3);
  }
  return out;
}

namespace {

// Gauss-Jordan with partial pivoting on the augmented [A | I] system.
bool invert4(const std::array<double, 16>& in, std::array<double, 16>& out) {
  double aug[4][8];
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      aug[r][c] = in[static_cast<std::size_t>(r * 4 + c)];
      aug[r][c + 4] = (r == c) ? 1.0 : 0.0;
    }
  }
  for (int col = 0; col < 4; ++col) {
    int pivot = col;
    for (int r = col + 1; r < 4; ++r) {
      if (std::abs(aug[r][col]) > std::abs(aug[pivot][col])) pivot = r;
    }
    if (std::abs(aug[pivot][col]) < 1e-12) return false;
    if (pivot != col) {
      for (int c = 0; c < 8; ++c) std::swap(aug[pivot][c], aug[col][c]);
    }
    const double inv = 1.0 / aug[col][col];
    for (int c = 0; c < 8; ++c) aug[col][c] *= inv;
    for (int r = 0; r < 4; ++r) {
      if (r == col) continue;
      const double f = aug[r][col];
      if (f == 0.0) continue;
      for (int c = 0; c < 8; ++c) aug[r][c] -= f * aug[col][c];
    }
  }
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) out[static_cast<std::size_t>(r * 4 + c)] = aug[r][c + 4];
  }
  return true;
}

}  // namespace

Affine4 Affine4::inverse() const {
  Affine4 out;
  if (!invert4(m, out.m)) {
    throw InvalidGeometry("affine matrix is singular");
  }
  return out;
}

bool Affine4::invertible() const {
  std::array<double, 16> scratch;
  return invert4(m, scratch);
}

GridGeometry::GridGeometry(std::array<std::int64_t, 3> shape_,
                           std::array<double, 3> spacing_, Affine4 affine_)
    : shape(shape_), spacing(spacing_), affine(affine_) {
  validate();
}

GridGeometry GridGeometry::axis_aligned(std::array<std::int64_t, 3> shape,
                                        std::array<double, 3> spacing,
                                        std::array<double, 3> origin) {
  return GridGeometry(shape, spacing, Affine4::scaling(spacing, origin));
}

std::array<double, 3> GridGeometry::direction(int axis) const {
  return {affine.at(0, axis) / spacing[static_cast<std::size_t>(axis)],
          affine.at(1, axis) / spacing[static_cast<std::size_t>(axis)],
          affine.at(2, axis) / spacing[static_cast<std::size_t>(axis)]};
}

void GridGeometry::validate() const {
  for (int i = 0; i < 3; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    if (shape[ui] < 1) {
      std::ostringstream os;
      os << "shape[" << i << "] = " << shape[ui] << ", must be >= 1";
      throw InvalidGeometry(os.str());
    }
    if (!(spacing[ui] > 0.0)) {
      std::ostringstream os;
      os << "spacing[" << i << "] = " << spacing[ui] << ", must be > 0";
      throw InvalidGeometry(os.str());
    }
    const double norm = std::sqrt(affine.at(0, i) * affine.at(0, i) +
                                  affine.at(1, i) * affine.at(1, i) +
                                  affine.at(2, i) * affine.at(2, i));
    if (std::abs(norm - spacing[ui]) > 1e-6 * spacing[ui]) {
      std::ostringstream os;
      os << "affine column " << i << " norm " << norm << " does not match spacing "
         << spacing[ui];
      throw InvalidGeometry(os.str());
    }
  }
  if (affine.at(3, 0) != 0.0 || affine.at(3, 1) != 0.0 || affine.at(3, 2) != 0.0 ||
      affine.at(3, 3) != 1.0) {
    throw InvalidGeometry("affine bottom row must be (0, 0, 0, 1)");
  }
  if (!affine.invertible()) {
    throw InvalidGeometry("affine matrix is singular");
  }
}

bool same_grid(const GridGeometry& a, const GridGeometry& b, double tol) {
  if (a.shape != b.shape) return false;
  for (std::size_t i = 0; i < 3; ++i) {
    if (std::abs(a.spacing[i] - b.spacing[i]) > tol) return false;
  }
  for (std::size_t i = 0; i < 16; ++i) {
    if (std::abs(a.affine.m[i] - b.affine.m[i]) > tol) return false;
  }
  return true;
}

}  // namespace resect
