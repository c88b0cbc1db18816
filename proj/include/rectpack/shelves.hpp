#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "rectpack/geometry.hpp"

namespace rectpack {

/// Unique j with 2^(j-1) < h <= 2^j.
int shelf_class(const Length& h);

/// Smallest j with value <= 2^j.
int ceil_log2(const Length& value);

struct Shelf {
  int height_class = 0;  // shelf height is 2^height_class
  Length y_bottom;
  Length fill_width;
  Length piece_area;
  Length height() const { return Length::pow2(height_class); }
};

/// Next-fit shelf packing inside a box of width 2^k whose bottom is y = 0.
/// Coordinates are relative to the box's lower-left corner.
class ShelfState {
 public:
  explicit ShelfState(int box_width_exp);

  int box_width_exp() const { return k_; }
  Length box_width() const { return Length::pow2(k_); }
  const std::vector<Shelf>& shelves() const { return shelves_; }
  const Length& total_height() const { return total_height_; }
  const Length& piece_area() const { return piece_area_; }
  /// Tallest piece placed so far (0 when empty).
  const Length& max_piece_height() const { return max_height_; }

  /// Fill width above half the box width.
  bool is_dense(const Shelf& shelf) const;
  std::size_t sparse_shelves_of_class(int height_class) const;

  /// Places the piece on the current sparse shelf of its class, or on a new
  /// shelf on top. Returns nullopt, leaving the state untouched, when the new
  /// shelf would end above `threshold`. Throws std::invalid_argument when the
  /// piece is wider than the box.
  std::optional<Placement> nfs_place(const Piece& piece, double threshold,
                                     std::size_t piece_index = 0);

 private:
  int k_;
  std::vector<Shelf> shelves_;
  std::map<int, std::size_t> sparse_;  // class -> index of its sparse shelf
  Length total_height_{0};
  Length piece_area_{0};
  Length max_height_{0};
};

struct DensityReport {
  Length total_shelf_height;
  Length piece_area;
  Length box_area_used;  // 2^k times the total shelf height
};

DensityReport density_report(const ShelfState& state);

}  // namespace rectpack
