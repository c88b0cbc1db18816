#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "rectpack/packer.hpp"
#include "rectpack/shelves.hpp"

namespace rectpack {

enum class DynBoxVariant { trans, rot, rot_opt4, rot_combined };

/// Height threshold after j pieces with tallest height h and total area sigma.
///   trans, rot:    h*sqrt(j) + 7h
///   rot_opt4:      sigma^(3/4) + 7h
///   rot_combined:  max(previous, sigma^(3/4) + 7h if sigma < j^2 else h*sqrt(j) + 7h)
double threshold(DynBoxVariant variant, std::size_t j, double h, double sigma, double previous);

/// A row of boxes B_k = [2^k, 2^(k+1)] x [0, T], each packed by next-fit
/// shelves. Pieces go to the active box; a piece wider than the active box
/// activates the box of its width class, and an overflow activates the next
/// box to the right.
class DynBoxPacker final : public OnlinePacker {
 public:
  explicit DynBoxPacker(DynBoxVariant variant);

  std::string_view name() const override;
  bool allows_rotation() const override { return variant_ != DynBoxVariant::trans; }
  Placement place(const Piece& piece) override;
  std::vector<Overlay> overlays() const override;

  DynBoxVariant variant() const { return variant_; }
  const std::map<int, ShelfState>& boxes() const { return boxes_; }
  std::optional<int> active() const { return active_; }
  double current_threshold() const { return threshold_; }
  std::size_t pieces_seen() const { return j_; }
  const Length& max_height() const { return max_height_; }
  const Length& total_area() const { return sigma_; }
  /// Exact bounding box of everything placed; throws std::invalid_argument
  /// when nothing has been placed.
  BoundingBox report_cost() const;

 private:
  ShelfState& box(int k);

  DynBoxVariant variant_;
  std::map<int, ShelfState> boxes_;
  std::optional<int> active_;
  std::size_t j_ = 0;
  Length max_height_{0};
  Length sigma_{0};
  double threshold_ = 0.0;
  std::optional<BoundingBox> bbox_;
};

}  // namespace rectpack
