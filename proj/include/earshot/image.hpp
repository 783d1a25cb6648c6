#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace earshot {

inline constexpr int kGridSize = 32;

// Dense pixel grids. The fixed 32x32 grids hold the working object
// maps; dynamic planes hold raw camera frames of arbitrary size.
template <typename Scalar>
using Grid = Eigen::Array<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

template <typename Scalar>
using Grid32 = Eigen::Array<Scalar, kGridSize, kGridSize, Eigen::RowMajor>;

using GrayPlane = Grid<std::uint8_t>;
using BinaryImage32 = Grid32<std::uint8_t>;   // cells in {0,1}
using LabeledImage32 = Grid32<std::uint8_t>;  // cells in {0,1,2,3}

struct RgbImage {
  GrayPlane r, g, b;

  Eigen::Index width() const { return r.cols(); }
  Eigen::Index height() const { return r.rows(); }
};

inline RgbImage make_rgb(Eigen::Index height, Eigen::Index width) {
  RgbImage img;
  img.r = GrayPlane::Zero(height, width);
  img.g = GrayPlane::Zero(height, width);
  img.b = GrayPlane::Zero(height, width);
  return img;
}

inline void require_planes_match(const RgbImage& img) {
  if (img.g.rows() != img.r.rows() || img.g.cols() != img.r.cols() ||
      img.b.rows() != img.r.rows() || img.b.cols() != img.r.cols())
    throw std::invalid_argument("rgb planes differ in size");
}

// Neighborhood shape applied at every pixel by a morphological
// operation; offsets are (drow, dcol) relative to the anchor.
struct StructuringElement {
  std::vector<std::pair<int, int>> offsets;
};

}  // namespace earshot
