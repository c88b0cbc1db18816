#include "rectpack/bricks.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rectpack {

Brick Brick::child(std::uint8_t step) const {
  Brick c = *this;
  c.path.push_back(step);
  return c;
}

bool Brick::descends_from(const Brick& other) const {
  if (fundamental != other.fundamental || synthetic_root != other.synthetic_root) return false;
  if (path.size() < other.path.size()) return false;
  return std::equal(other.path.begin(), other.path.end(), path.begin());
}

std::string Brick::to_string() const {
  std::string s = synthetic_root ? "B_{>" + std::to_string(fundamental) + "}"
                                 : "B_" + std::to_string(fundamental);
  for (auto step : path) s += "+" + std::to_string(static_cast<int>(step));
  return s;
}

bool BrickKeyLess::operator()(const Brick& a, const Brick& b) const {
  if (a.synthetic_root != b.synthetic_root) return a.synthetic_root < b.synthetic_root;
  if (a.fundamental != b.fundamental) return a.fundamental < b.fundamental;
  return std::lexicographical_compare(a.path.begin(), a.path.end(), b.path.begin(), b.path.end());
}

std::pair<Length, Length> brick_size(int level) {
  if (level % 2 == 0) return {Length::sqrt2_pow(-level), Length::sqrt2_pow(-level - 1)};
  return {Length::sqrt2_pow(-level - 1), Length::sqrt2_pow(-level)};
}

Rect fundamental_rect(int k) {
  auto [w, h] = brick_size(k);
  Length x = k % 2 == 0 ? Length(0) : Length::sqrt2_pow(-k - 1);
  Length y = k % 2 == 0 ? Length::sqrt2_pow(-k - 1) : Length(0);
  return Rect{x, y, x + w, y + h};
}

Rect synthetic_root_rect(int k) {
  auto [w, h] = brick_size(k);
  return Rect{Length(0), Length(0), w, h};
}

Rect brick_rect(const Brick& brick) {
  Rect r = brick.synthetic_root ? synthetic_root_rect(brick.fundamental)
                                : fundamental_rect(brick.fundamental);
  int level = brick.fundamental;
  for (auto step : brick.path) {
    if (level % 2 == 0) {
      Length mid = r.x_min + r.width() / 2;
      if (step == 1) {
        r.x_max = mid;
      } else {
        r.x_min = mid;
      }
    } else {
      Length mid = r.y_min + r.height() / 2;
      if (step == 1) {
        r.y_max = mid;
      } else {
        r.y_min = mid;
      }
    }
    ++level;
  }
  return r;
}

std::pair<Brick, Brick> split(const Brick& brick) { return {brick.child(1), brick.child(2)}; }

bool precedes(const Brick& lhs, const Brick& rhs) {
  if (lhs.level() != rhs.level()) {
    throw std::invalid_argument("precedes: bricks " + lhs.to_string() + " and " + rhs.to_string() +
                                " have different levels");
  }
  if (lhs.synthetic_root != rhs.synthetic_root) return lhs.synthetic_root;
  if (lhs.fundamental != rhs.fundamental) return lhs.fundamental > rhs.fundamental;
  return std::lexicographical_compare(lhs.path.begin(), lhs.path.end(), rhs.path.begin(),
                                      rhs.path.end());
}

bool fits_level(int level, const Length& width, const Length& height) {
  auto [w, h] = brick_size(level);
  return width <= w && height <= h;
}

int suitable_level(const Piece& piece) {
  // A level-m brick has sides about sqrt2^-m and sqrt2^(-m-1); start from the
  // double estimate and settle the boundary exactly.
  double w = piece.width.to_double();
  double h = piece.height.to_double();
  double estimate = std::min(-2.0 * std::log2(w), -2.0 * std::log2(h) - 1.0);
  int level = static_cast<int>(std::floor(estimate)) - 1;
  while (!fits_level(level, piece.width, piece.height)) --level;
  while (fits_level(level + 1, piece.width, piece.height)) ++level;
  return level;
}

BrickStack::BrickStack(Brick brick) : brick_(std::move(brick)), rect_(brick_rect(brick_)) {
  capacity_ = stacks_vertically() ? rect_.height() : rect_.width();
}

bool BrickStack::has_room(const Piece& piece) const {
  if (stacks_vertically()) {
    return piece.width <= rect_.width() && fill_ + piece.height <= capacity_;
  }
  return piece.height <= rect_.height() && fill_ + piece.width <= capacity_;
}

Placement BrickStack::stack_place(const Piece& piece, std::size_t piece_index, bool rotated) {
  if (!has_room(piece)) {
    throw std::logic_error("stack_place: brick " + brick_.to_string() + " has no room");
  }
  Placement pl;
  pl.piece_index = piece_index;
  pl.rotated = rotated;
  if (stacks_vertically()) {
    pl.x = rect_.x_min;
    pl.y = rect_.y_min + fill_;
    fill_ += piece.height;
  } else {
    pl.x = rect_.x_min + fill_;
    pl.y = rect_.y_min;
    fill_ += piece.width;
  }
  pieces_.push_back(StackedPiece{piece_index, piece, pl});
  return pl;
}

void OccupancyIndex::insert(const Brick& brick) { occupied_.insert(brick); }

bool OccupancyIndex::has_occupied_descendant(const Brick& brick) const {
  // Descendants sort directly after the brick itself.
  auto it = occupied_.upper_bound(brick);
  return it != occupied_.end() && it->descends_from(brick);
}

bool OccupancyIndex::has_occupied_ancestor_or_self(const Brick& brick) const {
  Brick prefix{brick.fundamental, brick.synthetic_root, {}};
  if (occupied_.count(prefix)) return true;
  for (auto step : brick.path) {
    prefix.path.push_back(step);
    if (occupied_.count(prefix)) return true;
  }
  return false;
}

bool OccupancyIndex::is_free(const Brick& brick) const {
  return !has_occupied_ancestor_or_self(brick) && !has_occupied_descendant(brick);
}

std::optional<Brick> OccupancyIndex::first_free(const Brick& root, int level) const {
  if (root.level() > level) return std::nullopt;
  if (occupied_.count(root)) return std::nullopt;
  if (!has_occupied_descendant(root)) {
    Brick b = root;
    b.path.resize(b.path.size() + static_cast<std::size_t>(level - root.level()), 1);
    return b;
  }
  if (root.level() == level) return std::nullopt;
  for (std::uint8_t step : {std::uint8_t{1}, std::uint8_t{2}}) {
    if (auto found = first_free(root.child(step), level)) return found;
  }
  return std::nullopt;
}

const char* to_string(BrickLabel label) {
  switch (label) {
    case BrickLabel::sparse: return "sparse";
    case BrickLabel::dense: return "dense";
    case BrickLabel::free: return "free";
    case BrickLabel::empty: return "empty";
  }
  return "?";
}

Brick BrickClassification::normalize(const Brick& brick) const {
  Brick b = brick;
  b.fundamental -= shift;
  return b;
}

std::optional<BrickLabel> BrickClassification::label_of(const Brick& b) const {
  if (b.synthetic_root || b.fundamental < 0) return std::nullopt;
  if (auto it = occupied_labels.find(b); it != occupied_labels.end()) return it->second;
  if (!occupied.is_free(b)) return std::nullopt;
  if (b.path.empty()) return BrickLabel::empty;
  Brick parent = b;
  parent.path.pop_back();
  return occupied.is_free(parent) ? BrickLabel::free : BrickLabel::empty;
}

namespace {

void collect_empty(const OccupancyIndex& occ, const Brick& node,
                   std::vector<std::pair<Brick, BrickLabel>>& out) {
  if (occ.contains(node)) return;
  if (!occ.has_occupied_descendant(node)) {
    out.emplace_back(node, BrickLabel::empty);
    return;
  }
  collect_empty(occ, node.child(1), out);
  collect_empty(occ, node.child(2), out);
}

}  // namespace

BrickClassification classify(std::span<const BrickStack> stacks) {
  BrickClassification c;
  if (stacks.empty()) return c;
  int min_tree = stacks.front().brick().fundamental;
  int max_tree = min_tree;
  for (const auto& s : stacks) {
    if (s.brick().synthetic_root) {
      throw std::invalid_argument("classify: synthetic roots are not part of the quadrant tiling");
    }
    min_tree = std::min(min_tree, s.brick().fundamental);
    max_tree = std::max(max_tree, s.brick().fundamental);
  }
  c.shift = min_tree;
  c.empty_tail_from = max_tree - min_tree + 1;
  for (const auto& s : stacks) {
    Brick b = c.normalize(s.brick());
    c.occupied.insert(b);
    // Sparse: stacked extent below half the brick's extent on the stacking axis.
    BrickLabel label = s.fill() * 2 < s.capacity() ? BrickLabel::sparse : BrickLabel::dense;
    c.occupied_labels.emplace(b, label);
    c.labels.emplace_back(b, label);
  }
  for (int i = 0; i < c.empty_tail_from; ++i) {
    collect_empty(c.occupied, Brick::fundamental_brick(i), c.labels);
  }
  return c;
}

}  // namespace rectpack
