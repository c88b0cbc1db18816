#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rectpack/geometry.hpp"

namespace rectpack {

// A k-brick is sqrt2^-k x sqrt2^(-k-1) for even k and sqrt2^(-k-1) x sqrt2^-k
// for odd k, so every brick has aspect ratio sqrt2. The fundamental bricks B_k
// tile the open positive quadrant; B_{>k} is the k-brick below (k even) or left
// of (k odd) B_k.

/// A derived brick: a fundamental brick B_k (or the synthetic root B_{>k} used
/// by the modified packer) followed by a path of halvings. Step 1 takes the
/// left half of an even-level brick and the lower half of an odd-level brick.
struct Brick {
  int fundamental = 0;
  bool synthetic_root = false;
  std::vector<std::uint8_t> path;

  static Brick fundamental_brick(int k) { return Brick{k, false, {}}; }
  static Brick root_below(int k) { return Brick{k, true, {}}; }

  int level() const { return fundamental + static_cast<int>(path.size()); }
  Brick child(std::uint8_t step) const;
  /// True iff this brick equals `other` or is obtained from it by halvings.
  bool descends_from(const Brick& other) const;
  std::string to_string() const;
  bool operator==(const Brick&) const = default;
};

/// Strict weak order used for set storage (not the packing order).
struct BrickKeyLess {
  bool operator()(const Brick& a, const Brick& b) const;
};

/// Width and height of a level-k brick.
std::pair<Length, Length> brick_size(int level);
Rect fundamental_rect(int k);
/// The k-brick B_{>k}, the union of all B_i with i > k.
Rect synthetic_root_rect(int k);
Rect brick_rect(const Brick& brick);

/// The two halves (brick+1, brick+2).
std::pair<Brick, Brick> split(const Brick& brick);

/// The packing order on same-level derived bricks: bricks inside a deeper
/// fundamental brick come first (the synthetic root counts as deepest), then
/// lexicographic on the halving path. Throws std::invalid_argument when the
/// levels differ.
bool precedes(const Brick& lhs, const Brick& rhs);

/// Whether a w x h piece fits a level-k brick (inclusive at equality).
bool fits_level(int level, const Length& width, const Length& height);
/// Largest level whose bricks fit the piece.
int suitable_level(const Piece& piece);

struct StackedPiece {
  std::size_t piece_index = 0;
  Piece piece;  // as oriented inside the brick
  Placement placement;
};

/// Pieces stacked bottom-up (even level) or left-to-right (odd level) against
/// the brick's left or bottom edge respectively.
class BrickStack {
 public:
  explicit BrickStack(Brick brick);

  const Brick& brick() const { return brick_; }
  const Rect& rect() const { return rect_; }
  int level() const { return brick_.level(); }
  /// Total stacked extent along the stacking axis.
  const Length& fill() const { return fill_; }
  /// The brick's extent along the stacking axis.
  const Length& capacity() const { return capacity_; }
  const std::vector<StackedPiece>& pieces() const { return pieces_; }

  bool has_room(const Piece& piece) const;
  /// Throws std::logic_error when the stack has no room.
  Placement stack_place(const Piece& piece, std::size_t piece_index, bool rotated = false);

 private:
  bool stacks_vertically() const { return level() % 2 == 0; }

  Brick brick_;
  Rect rect_;
  Length capacity_;
  Length fill_{0};
  std::vector<StackedPiece> pieces_;
};

/// Set of occupied derived bricks with the queries the packers need.
/// Two derived bricks of the same tree are interior-disjoint iff neither
/// descends from the other; bricks of different trees are always disjoint.
class OccupancyIndex {
 public:
  void insert(const Brick& brick);
  bool contains(const Brick& brick) const { return occupied_.count(brick) != 0; }
  /// Interior-disjoint from every occupied brick.
  bool is_free(const Brick& brick) const;
  bool has_occupied_descendant(const Brick& brick) const;
  bool has_occupied_ancestor_or_self(const Brick& brick) const;
  /// Lexicographically first free descendant of `root` at `level`, if any.
  std::optional<Brick> first_free(const Brick& root, int level) const;
  const std::set<Brick, BrickKeyLess>& bricks() const { return occupied_; }

 private:
  std::set<Brick, BrickKeyLess> occupied_;
};

enum class BrickLabel { sparse, dense, free, empty };
const char* to_string(BrickLabel label);

/// Sparse/dense/free/empty labels of a normalized terminal state: all
/// fundamental indices are shifted so the outermost occupied tree is B_0.
struct BrickClassification {
  int shift = 0;  // subtracted from every fundamental index
  /// Occupied bricks (sparse or dense) and the empty bricks inside trees
  /// 0..empty_tail_from-1, in normalized coordinates.
  std::vector<std::pair<Brick, BrickLabel>> labels;
  /// B_i is empty for every i >= empty_tail_from.
  int empty_tail_from = 0;
  OccupancyIndex occupied;  // normalized
  std::map<Brick, BrickLabel, BrickKeyLess> occupied_labels;

  /// Label of any normalized brick inside B_{>=0}; nullopt for bricks that
  /// overlap an occupied brick without being one, or lie outside B_{>=0}.
  std::optional<BrickLabel> label_of(const Brick& normalized) const;
  Brick normalize(const Brick& brick) const;
};

/// Test instrumentation for the invariants of the brick packers. Throws
/// std::invalid_argument for states containing a synthetic root.
BrickClassification classify(std::span<const BrickStack> stacks);

}  // namespace rectpack
