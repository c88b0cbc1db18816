#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rectpack/length.hpp"

namespace rectpack {

/// Raised when a stream or piece fails validation.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised for an invalid combination of options (algorithm vs objective, caps...).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A packer produced overlapping pieces or left a piece outside its container.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Axis-parallel rectangle with positive width and height.
struct Piece {
  Length width;
  Length height;

  /// Validating constructor; throws ParseError on a non-positive side.
  static Piece make(Length width, Length height);
  Length area() const { return width * height; }
  Length long_side() const { return max(width, height); }
  Length short_side() const { return min(width, height); }
  Piece rotated() const { return Piece{height, width}; }
};

/// Final pose of a piece: lower-left corner plus a 90 degree rotation flag.
struct Placement {
  std::size_t piece_index = 0;
  Length x;
  Length y;
  bool rotated = false;
};

/// Closed rectangle [x_min, x_max] x [y_min, y_max]. Also used for bounding boxes.
struct Rect {
  Length x_min;
  Length y_min;
  Length x_max;
  Length y_max;

  Length width() const { return x_max - x_min; }
  Length height() const { return y_max - y_min; }
  bool contains(const Rect& inner) const;
  /// True iff the open interiors intersect.
  bool interiors_overlap(const Rect& other) const;
  bool operator==(const Rect&) const = default;
};

using BoundingBox = Rect;

/// Rectangle occupied by `piece` when placed according to `placement`.
Rect placed_rect(const Piece& piece, const Placement& placement);

/// Resolves every placement against `pieces` (indexed by Placement::piece_index).
std::vector<Rect> placed_rects(std::span<const Piece> pieces, std::span<const Placement> placements);

/// Smallest box containing all rects. Throws std::invalid_argument("empty packing").
BoundingBox bounding_box(std::span<const Rect> rects);
BoundingBox bounding_box(std::span<const Piece> pieces, std::span<const Placement> placements);

Length semiperimeter(const BoundingBox& box);
Length perimeter_cost(const BoundingBox& box);
Length area_cost(const BoundingBox& box);
/// Area of the smallest axis-parallel square containing the box.
Length square_area_cost(const BoundingBox& box);

/// Pairwise interior-disjointness; shared edges are allowed.
bool interiors_disjoint(std::span<const Rect> rects);
bool interiors_disjoint(std::span<const Piece> pieces, std::span<const Placement> placements);

}  // namespace rectpack
