#pragma once

#include "earshot/image.hpp"

namespace earshot {

// 2x3 block of ones anchored at the top-center cell, so dilation grows
// objects downward toward the near side of the frame.
StructuringElement dilation_element();

// Discrete disk of radius one (a 3x3 cross).
StructuringElement erosion_element();

// Box-average downscale onto the 32x32 working grid. Each axis is
// partitioned by even division with the last bin absorbing the
// remainder; inputs shorter than 32 pixels on an axis fall back to
// nearest-pixel sampling on that axis.
RgbImage resize_box(const RgbImage& img);

// Thresholded Sobel magnitude, |Gx| + |Gy| with replicate border
// padding. A pixel is an edge iff the magnitude strictly exceeds the
// threshold.
BinaryImage32 sobel_edges(const GrayPlane& plane, int threshold);

inline BinaryImage32 combine_or(const BinaryImage32& e_r, const BinaryImage32& e_g,
                                const BinaryImage32& e_b) {
  return e_r.max(e_g).max(e_b);
}

// out(p) = 1 iff some offset o has img(p - o) = 1; reads outside the
// grid are zero.
BinaryImage32 dilate(const BinaryImage32& img, const StructuringElement& se);

// Background pixels not 4-connected to the border become foreground;
// existing foreground is preserved.
BinaryImage32 fill_holes(const BinaryImage32& img);

// out(p) = 1 iff img(p + o) = 1 for every offset o; reads outside the
// grid are zero.
BinaryImage32 erode(const BinaryImage32& img, const StructuringElement& se);

}  // namespace earshot
