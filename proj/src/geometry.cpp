#include "rectpack/geometry.hpp"

#include <algorithm>
#include <numeric>

namespace rectpack {

Piece Piece::make(Length width, Length height) {
  if (width.sign() <= 0 || height.sign() <= 0) {
    throw ParseError("piece sides must be positive, got " + width.to_string() + " x " +
                     height.to_string());
  }
  return Piece{std::move(width), std::move(height)};
}

bool Rect::contains(const Rect& inner) const {
  return x_min <= inner.x_min && inner.x_max <= x_max && y_min <= inner.y_min &&
         inner.y_max <= y_max;
}

bool Rect::interiors_overlap(const Rect& other) const {
  return x_min < other.x_max && other.x_min < x_max && y_min < other.y_max &&
         other.y_min < y_max;
}

Rect placed_rect(const Piece& piece, const Placement& placement) {
  const Length& w = placement.rotated ? piece.height : piece.width;
  const Length& h = placement.rotated ? piece.width : piece.height;
  return Rect{placement.x, placement.y, placement.x + w, placement.y + h};
}

std::vector<Rect> placed_rects(std::span<const Piece> pieces, std::span<const Placement> placements) {
  std::vector<Rect> rects;
  rects.reserve(placements.size());
  for (const auto& pl : placements) {
    if (pl.piece_index >= pieces.size()) {
      throw std::out_of_range("placement refers to unknown piece " + std::to_string(pl.piece_index));
    }
    rects.push_back(placed_rect(pieces[pl.piece_index], pl));
  }
  return rects;
}

BoundingBox bounding_box(std::span<const Rect> rects) {
  if (rects.empty()) throw std::invalid_argument("empty packing");
  BoundingBox box = rects.front();
  for (const auto& r : rects.subspan(1)) {
    if (r.x_min < box.x_min) box.x_min = r.x_min;
    if (r.y_min < box.y_min) box.y_min = r.y_min;
    if (box.x_max < r.x_max) box.x_max = r.x_max;
    if (box.y_max < r.y_max) box.y_max = r.y_max;
  }
  return box;
}

BoundingBox bounding_box(std::span<const Piece> pieces, std::span<const Placement> placements) {
  auto rects = placed_rects(pieces, placements);
  return bounding_box(rects);
}

Length semiperimeter(const BoundingBox& box) { return box.width() + box.height(); }

Length perimeter_cost(const BoundingBox& box) { return 2 * semiperimeter(box); }

Length area_cost(const BoundingBox& box) { return box.width() * box.height(); }

Length square_area_cost(const BoundingBox& box) {
  Length side = max(box.width(), box.height());
  return side * side;
}

bool interiors_disjoint(std::span<const Rect> rects) {
  // Sweep over x: only rects whose x-ranges overlap need a y test.
  std::vector<std::size_t> order(rects.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return rects[a].x_min < rects[b].x_min; });
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Rect& r = rects[order[i]];
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      const Rect& s = rects[order[j]];
      if (!(s.x_min < r.x_max)) break;
      if (r.interiors_overlap(s)) return false;
    }
  }
  return true;
}

bool interiors_disjoint(std::span<const Piece> pieces, std::span<const Placement> placements) {
  auto rects = placed_rects(pieces, placements);
  return interiors_disjoint(rects);
}

}  // namespace rectpack
