#pragma once

#include "earshot/image.hpp"

#include <functional>
#include <utility>
#include <vector>

namespace earshot {

struct ObjectStats {
  int id = 0;    // discovery ordinal in the row-major scan
  int size = 0;  // member pixels, any label >= 1
  int c1 = 0;    // label-3 pixels (concentration in A1)
  int c2 = 0;    // label-2 pixels (concentration in A2)
  double centroid_row = 0.0;
  double centroid_col = 0.0;
};

using PixelVisitor = std::function<void(int object_id, int row, int col)>;

// Destructive 8-connected component extraction. Scans row-major and
// floods each object with an iterative worklist, zeroing every cell as
// it is claimed, so the returned image is identically zero. Stats come
// back in discovery order. The optional visitor sees every claimed
// pixel once.
std::pair<std::vector<ObjectStats>, LabeledImage32> flood_extract(LabeledImage32 img);
std::pair<std::vector<ObjectStats>, LabeledImage32> flood_extract(LabeledImage32 img,
                                                                  const PixelVisitor& visit);

}  // namespace earshot
