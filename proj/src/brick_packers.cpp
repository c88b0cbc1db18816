#include "rectpack/brick_packers.hpp"

#include <algorithm>

namespace rectpack {

BrickPacker::BrickPacker(BrickVariant variant) : variant_(variant) {}

std::string_view BrickPacker::name() const {
  switch (variant_) {
    case BrickVariant::translation: return "brick-translation";
    case BrickVariant::rotation: return "brick-rotation";
    case BrickVariant::modified: return "brick-modified";
  }
  return "brick";
}

Brick BrickPacker::free_brick(int level) const {
  int top = level;
  if (root_level_) {
    if (level >= *root_level_) {
      if (auto b = occupied_.first_free(Brick::root_below(*root_level_), level)) return *b;
    }
    top = std::min(level, *root_level_);
  }
  // Trees are tried from the deepest down; only finitely many are occupied,
  // so an untouched tree is reached eventually.
  for (int i = top;; --i) {
    if (auto b = occupied_.first_free(Brick::fundamental_brick(i), level)) return *b;
  }
}

Placement BrickPacker::place(const Piece& input) {
  bool rotated = variant_ == BrickVariant::rotation && input.height < input.width;
  Piece piece = rotated ? input.rotated() : input;
  int level = suitable_level(piece);
  if (variant_ == BrickVariant::modified && !root_level_) root_level_ = level;

  std::size_t index = count_++;
  auto& at_level = by_level_[level];
  for (std::size_t s : at_level) {
    if (stacks_[s].has_room(piece)) return stacks_[s].stack_place(piece, index, rotated);
  }

  Brick brick = free_brick(level);
  occupied_.insert(brick);
  stacks_.emplace_back(brick);
  std::size_t fresh = stacks_.size() - 1;
  auto pos = std::lower_bound(at_level.begin(), at_level.end(), fresh,
                              [&](std::size_t a, std::size_t b) {
                                return precedes(stacks_[a].brick(), stacks_[b].brick());
                              });
  at_level.insert(pos, fresh);
  return stacks_[fresh].stack_place(piece, index, rotated);
}

std::vector<Overlay> BrickPacker::overlays() const {
  std::vector<Overlay> out;
  out.reserve(stacks_.size());
  for (const auto& s : stacks_) out.push_back(Overlay{"brick", s.rect()});
  return out;
}

std::vector<Placement> run_stream(BrickVariant variant, std::span<const Piece> pieces,
                                  const BrickObserver& observer) {
  BrickPacker packer(variant);
  std::vector<Placement> placements;
  placements.reserve(pieces.size());
  for (const auto& p : pieces) {
    placements.push_back(packer.place(p));
    if (observer) observer(packer, placements.back());
  }
  return placements;
}

}  // namespace rectpack
