#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "rectpack/geometry.hpp"

namespace rectpack {

/// Outline drawn behind the pieces when rendering (a brick, box or shelf).
struct Overlay {
  std::string kind;
  Rect rect;
};

/// Online packer: each piece is placed irrevocably before the next one is seen.
class OnlinePacker {
 public:
  virtual ~OnlinePacker() = default;

  virtual std::string_view name() const = 0;
  virtual bool allows_rotation() const = 0;
  /// Places the next piece of the stream. Placement::piece_index is the
  /// ordinal of the piece in the stream.
  virtual Placement place(const Piece& piece) = 0;
  /// Container outlines for rendering; empty by default.
  virtual std::vector<Overlay> overlays() const { return {}; }
};

enum class ObjectiveClass { perimeter, area };

/// Names accepted by make_packer.
const std::vector<std::string>& packer_names();
/// Throws ConfigError on an unknown name.
std::unique_ptr<OnlinePacker> make_packer(std::string_view name);
/// Brick packers serve the perimeter and bounding-square objectives, the
/// dynamic-box packers the area objective.
ObjectiveClass packer_class(std::string_view name);

}  // namespace rectpack
