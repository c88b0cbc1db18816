#pragma once

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "rectpack/bricks.hpp"
#include "rectpack/packer.hpp"

namespace rectpack {

enum class BrickVariant { translation, rotation, modified };

/// Online perimeter packer over the brick tiling. Each piece goes to the
/// first (in precedes order) stack of its suitable level with room, or else
/// to a fresh stack in the first free brick of that level.
///
/// The modified variant treats B_{>r} as one fundamental brick, r being the
/// suitable level of the first piece, and never uses B_i for i > r.
class BrickPacker final : public OnlinePacker {
 public:
  explicit BrickPacker(BrickVariant variant);

  std::string_view name() const override;
  bool allows_rotation() const override { return variant_ == BrickVariant::rotation; }
  Placement place(const Piece& piece) override;
  std::vector<Overlay> overlays() const override;

  BrickVariant variant() const { return variant_; }
  const std::vector<BrickStack>& stacks() const { return stacks_; }
  const OccupancyIndex& occupied() const { return occupied_; }
  std::optional<int> modified_root_level() const { return root_level_; }

 private:
  Brick free_brick(int level) const;

  BrickVariant variant_;
  std::vector<BrickStack> stacks_;
  // Stack indices per level, kept sorted by precedes.
  std::map<int, std::vector<std::size_t>> by_level_;
  OccupancyIndex occupied_;
  std::optional<int> root_level_;
  std::size_t count_ = 0;
};

/// Called after every placement with the packer state.
using BrickObserver = std::function<void(const BrickPacker&, const Placement&)>;

std::vector<Placement> run_stream(BrickVariant variant, std::span<const Piece> pieces,
                                  const BrickObserver& observer = {});

}  // namespace rectpack
