#include "rectpack/shelves.hpp"

#include <cmath>
#include <stdexcept>

namespace rectpack {

int ceil_log2(const Length& value) {
  if (value.sign() <= 0) throw std::invalid_argument("ceil_log2 of a non-positive length");
  int j = static_cast<int>(std::ceil(std::log2(value.to_double())));
  while (Length::pow2(j) < value) ++j;
  while (value <= Length::pow2(j - 1)) --j;
  return j;
}

int shelf_class(const Length& h) { return ceil_log2(h); }

ShelfState::ShelfState(int box_width_exp) : k_(box_width_exp) {}

bool ShelfState::is_dense(const Shelf& shelf) const {
  return Length::pow2(k_ - 1) < shelf.fill_width;
}

std::size_t ShelfState::sparse_shelves_of_class(int height_class) const {
  std::size_t n = 0;
  for (const auto& s : shelves_) {
    if (s.height_class == height_class && !is_dense(s)) ++n;
  }
  return n;
}

std::optional<Placement> ShelfState::nfs_place(const Piece& piece, double threshold,
                                               std::size_t piece_index) {
  Length width = box_width();
  if (width < piece.width) {
    throw std::invalid_argument("piece of width " + piece.width.to_string() +
                                " does not fit a box of width " + width.to_string());
  }
  int cls = shelf_class(piece.height);

  std::size_t target;
  auto it = sparse_.find(cls);
  if (it != sparse_.end() && shelves_[it->second].fill_width + piece.width <= width) {
    target = it->second;
  } else {
    // Existing shelves already lie below every later threshold, so only a
    // new shelf can overflow.
    Length top = total_height_ + Length::pow2(cls);
    if (top.to_double() > threshold * (1.0 + 1e-12)) return std::nullopt;
    shelves_.push_back(Shelf{cls, total_height_, Length(0), Length(0)});
    total_height_ = top;
    target = shelves_.size() - 1;
    // A piece only misses the sparse shelf when it is wider than half the
    // box, so the new shelf is dense and the old one stays current.
    if (it == sparse_.end()) sparse_[cls] = target;
  }

  Shelf& shelf = shelves_[target];
  Placement pl{piece_index, shelf.fill_width, shelf.y_bottom, false};
  shelf.fill_width += piece.width;
  Length area = piece.area();
  shelf.piece_area += area;
  piece_area_ += area;
  if (max_height_ < piece.height) max_height_ = piece.height;
  if (is_dense(shelf)) {
    if (auto s = sparse_.find(cls); s != sparse_.end() && s->second == target) sparse_.erase(s);
  }
  return pl;
}

DensityReport density_report(const ShelfState& state) {
  return DensityReport{state.total_height(), state.piece_area(),
                       state.box_width() * state.total_height()};
}

}  // namespace rectpack
