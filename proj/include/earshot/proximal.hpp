#pragma once

#include "earshot/image.hpp"

namespace earshot {

struct IndexRange {
  int lo = 0;
  int hi = 0;  // inclusive

  int count() const { return hi - lo + 1; }
  bool contains(int i) const { return i >= lo && i <= hi; }
};

// Proximal danger geometry. A1 is the band nearest the navigator
// (largest row indices), A2 sits directly above it, and both share one
// column range so their union is a contiguous rectangle.
struct RegionMasks {
  IndexRange a1_rows, a1_cols;
  IndexRange a2_rows, a2_cols;

  bool in_a1(int row, int col) const {
    return a1_rows.contains(row) && a1_cols.contains(col);
  }
  bool in_a2(int row, int col) const {
    return a2_rows.contains(row) && a2_cols.contains(col);
  }

  // throws std::invalid_argument when the geometry invariants fail
  void validate() const;
};

// A1 = rows 24..31 x cols 8..23, A2 = rows 8..23 x cols 8..23:
// horizontally centered, anchored to the bottom of the frame.
RegionMasks default_masks();

// label = img + (img & M1) + (img & M2) where M1 covers A1 and A2 and
// M2 covers A1 alone: 0 background, 1 object outside the proximal
// area, 2 object in A2, 3 object in A1.
LabeledImage32 label_regions(const BinaryImage32& img, const RegionMasks& masks);

}  // namespace earshot
