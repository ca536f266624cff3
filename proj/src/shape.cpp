#include "treeperm/shape.hpp"

#include <limits>
#include <string>

namespace treeperm {

TreeShape::TreeShape(Label arity, Label node_count)
    : d_(arity), n_(node_count) {
  if (d_ < 1) {
    throw Error(ErrorCode::InvalidShape,
                "arity d must be >= 1, got " + std::to_string(d_));
  }
  if (n_ < 0) {
    throw Error(ErrorCode::InvalidShape,
                "node count n must be >= 0, got " + std::to_string(n_));
  }
  // d*n + 1 must stay representable; labels are plain 64-bit integers.
  constexpr Label kMax = std::numeric_limits<Label>::max() - 1;
  if (n_ != 0 && d_ > kMax / n_) {
    throw Error(ErrorCode::InvalidShape,
                "d*n overflows the label type (d = " + std::to_string(d_) +
                    ", n = " + std::to_string(n_) + ")");
  }
}

}  // namespace treeperm
