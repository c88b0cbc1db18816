#include "rectpack/dynbox.hpp"

#include <cmath>
#include <stdexcept>

namespace rectpack {

double threshold(DynBoxVariant variant, std::size_t j, double h, double sigma, double previous) {
  double jd = static_cast<double>(j);
  double by_count = h * std::sqrt(jd) + 7.0 * h;
  double by_area = std::pow(sigma, 0.75) + 7.0 * h;
  switch (variant) {
    case DynBoxVariant::trans:
    case DynBoxVariant::rot: return by_count;
    case DynBoxVariant::rot_opt4: return by_area;
    case DynBoxVariant::rot_combined: return std::max(previous, sigma < jd * jd ? by_area : by_count);
  }
  return by_count;
}

DynBoxPacker::DynBoxPacker(DynBoxVariant variant) : variant_(variant) {}

std::string_view DynBoxPacker::name() const {
  switch (variant_) {
    case DynBoxVariant::trans: return "dynbox-trans";
    case DynBoxVariant::rot: return "dynbox-rot";
    case DynBoxVariant::rot_opt4: return "dynbox-rot-opt4";
    case DynBoxVariant::rot_combined: return "dynbox-rot-combined";
  }
  return "dynbox";
}

ShelfState& DynBoxPacker::box(int k) { return boxes_.try_emplace(k, k).first->second; }

Placement DynBoxPacker::place(const Piece& input) {
  bool rotated = allows_rotation() && input.height < input.width;
  Piece piece = rotated ? input.rotated() : input;
  std::size_t index = j_++;
  if (max_height_ < piece.height) max_height_ = piece.height;
  sigma_ += piece.area();
  threshold_ = threshold(variant_, j_, max_height_.to_double(), sigma_.to_double(), threshold_);

  std::optional<Placement> local;
  if (!active_ || Length::pow2(*active_) < piece.width) {
    active_ = ceil_log2(piece.width);
    local = box(*active_).nfs_place(piece, threshold_, index);
  } else {
    local = box(*active_).nfs_place(piece, threshold_, index);
    if (!local) {
      ++*active_;
      local = box(*active_).nfs_place(piece, threshold_, index);
    }
  }
  if (!local) {
    throw InvariantViolation("fresh box " + std::to_string(*active_) + " overflowed");
  }

  Placement pl = *local;
  pl.x += Length::pow2(*active_);
  pl.rotated = rotated;
  Rect r = placed_rect(input, pl);
  if (!bbox_) {
    bbox_ = r;
  } else {
    bbox_ = bounding_box(std::vector<Rect>{*bbox_, r});
  }
  return pl;
}

BoundingBox DynBoxPacker::report_cost() const {
  if (!bbox_) throw std::invalid_argument("empty packing");
  return *bbox_;
}

std::vector<Overlay> DynBoxPacker::overlays() const {
  std::vector<Overlay> out;
  Length top = Length::from_double(threshold_);
  for (const auto& [k, state] : boxes_) {
    Length x0 = Length::pow2(k);
    Length x1 = Length::pow2(k + 1);
    out.push_back(Overlay{"box", Rect{x0, Length(0), x1, max(top, state.total_height())}});
    for (const auto& s : state.shelves()) {
      out.push_back(Overlay{"shelf", Rect{x0, s.y_bottom, x1, s.y_bottom + s.height()}});
    }
  }
  return out;
}

}  // namespace rectpack
