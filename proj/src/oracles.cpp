#include "rectpack/oracles.hpp"

#include <algorithm>
#include <cmath>

namespace rectpack {

const char* to_string(Objective objective) {
  switch (objective) {
    case Objective::perimeter: return "perimeter";
    case Objective::area: return "area";
    case Objective::square_area: return "square";
  }
  return "?";
}

const char* to_string(OptKind kind) {
  switch (kind) {
    case OptKind::exact: return "exact";
    case OptKind::lower: return "lower";
    case OptKind::witness: return "witness";
  }
  return "?";
}

Objective parse_objective(const std::string& text) {
  if (text == "perimeter") return Objective::perimeter;
  if (text == "area") return Objective::area;
  if (text == "square" || text == "square_area") return Objective::square_area;
  throw ConfigError("unknown objective '" + text + "' (expected perimeter, area or square)");
}

Length objective_cost(Objective objective, const BoundingBox& box) {
  switch (objective) {
    case Objective::perimeter: return perimeter_cost(box);
    case Objective::area: return area_cost(box);
    case Objective::square_area: return square_area_cost(box);
  }
  return area_cost(box);
}

namespace {

struct Extremes {
  Length max_w{0}, max_h{0}, max_long{0}, max_short{0}, total_area{0};
};

Extremes extremes(std::span<const Piece> pieces) {
  if (pieces.empty()) throw std::invalid_argument("empty stream");
  Extremes e;
  for (const auto& p : pieces) {
    e.max_w = max(e.max_w, p.width);
    e.max_h = max(e.max_h, p.height);
    e.max_long = max(e.max_long, p.long_side());
    e.max_short = max(e.max_short, p.short_side());
    e.total_area += p.area();
  }
  return e;
}

OptBound exact_bound(Objective objective, bool rotations, Length value) {
  double v = value.to_double();
  return OptBound{OptKind::lower, objective, rotations, v, std::move(value)};
}

}  // namespace

OptBound lower_bound_perimeter(std::span<const Piece> pieces, bool rotations) {
  Extremes e = extremes(pieces);
  const Length& l = e.max_long;
  const Length& a = e.total_area;
  Length dims = rotations ? e.max_long + e.max_short : e.max_w + e.max_h;
  if (a < l * l) return exact_bound(Objective::perimeter, rotations, 2 * max(l + a / l, dims));
  // Square root of the area leaves the exact field.
  if (4 * a <= dims * dims) return exact_bound(Objective::perimeter, rotations, 2 * dims);
  return OptBound{OptKind::lower, Objective::perimeter, rotations, 4.0 * std::sqrt(a.to_double()),
                  std::nullopt};
}

OptBound lower_bound_area(std::span<const Piece> pieces, bool rotations) {
  Extremes e = extremes(pieces);
  Length dims = rotations ? e.max_long * e.max_short : e.max_w * e.max_h;
  return exact_bound(Objective::area, rotations, max(e.total_area, dims));
}

OptBound lower_bound_square(std::span<const Piece> pieces, bool rotations) {
  Extremes e = extremes(pieces);
  return exact_bound(Objective::square_area, rotations,
                     max(e.total_area, e.max_long * e.max_long));
}

OptBound lower_bound(std::span<const Piece> pieces, Objective objective, bool rotations) {
  switch (objective) {
    case Objective::perimeter: return lower_bound_perimeter(pieces, rotations);
    case Objective::area: return lower_bound_area(pieces, rotations);
    case Objective::square_area: return lower_bound_square(pieces, rotations);
  }
  return lower_bound_area(pieces, rotations);
}

namespace {

// Completeness of the search below. Take any packing inside a W x H
// container. Sweep the pieces in order of x and slide each one left until it
// touches the wall or a piece already swept; then do the same downwards in
// order of y. Sliding never creates overlaps, and afterwards every x is the
// sum of the x-extents of a chain of distinct pieces to its left (likewise
// for y). So some packing uses only subset sums of extents as coordinates,
// and the bounding box of a compacted optimum is itself such a subset sum.
//
// On that grid, the lowest-then-leftmost uncovered cell of a partial packing
// is either waste in the target packing or the lower-left cell of one of the
// remaining pieces; anything else would overlap the cells already covered.

std::vector<Length> sorted_unique(std::vector<Length> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<Length> subset_sums(std::span<const Piece> pieces, bool rotations, bool along_x) {
  std::vector<Length> sums{Length(0)};
  for (const auto& p : pieces) {
    std::vector<Length> next = sums;
    const Length& primary = along_x ? p.width : p.height;
    const Length& secondary = along_x ? p.height : p.width;
    for (const auto& s : sums) {
      next.push_back(s + primary);
      if (rotations) next.push_back(s + secondary);
    }
    sums = sorted_unique(std::move(next));
  }
  return sums;
}

struct Orientation {
  Length w, h;
  bool rotated;
};

class GridSearch {
 public:
  GridSearch(std::span<const Piece> pieces, bool rotations, const std::vector<Length>& xsums,
             const std::vector<Length>& ysums, std::size_t& nodes, std::size_t max_nodes)
      : pieces_(pieces), rotations_(rotations), xsums_(xsums), ysums_(ysums), nodes_(nodes),
        max_nodes_(max_nodes) {
    total_area_ = 0.0;
    for (const auto& p : pieces) total_area_ += p.area().to_double();
    group_.resize(pieces.size());
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      group_[i] = i;
      for (std::size_t j = 0; j < i; ++j) {
        if (pieces[j].width == pieces[i].width && pieces[j].height == pieces[i].height) {
          group_[i] = group_[j];
          break;
        }
      }
      orientations_.push_back({Orientation{pieces[i].width, pieces[i].height, false}});
      if (rotations && pieces[i].width != pieces[i].height) {
        orientations_.back().push_back(Orientation{pieces[i].height, pieces[i].width, true});
      }
    }
  }

  /// Feasible packing in a W x H container, as placements, if any.
  std::optional<std::vector<Placement>> solve(const Length& width, const Length& height) {
    gx_ = grid(xsums_, width);
    gy_ = grid(ysums_, height);
    nx_ = gx_.size() - 1;
    ny_ = gy_.size() - 1;
    cell_w_.resize(nx_);
    cell_h_.resize(ny_);
    for (std::size_t i = 0; i < nx_; ++i) cell_w_[i] = (gx_[i + 1] - gx_[i]).to_double();
    for (std::size_t i = 0; i < ny_; ++i) cell_h_[i] = (gy_[i + 1] - gy_[i]).to_double();
    end_x_ = ends(gx_, true);
    end_y_ = ends(gy_, false);
    double box = (width * height).to_double();
    waste_budget_ = box - total_area_ + 1e-9 * box;
    if (waste_budget_ < 0) return std::nullopt;
    covered_.assign(nx_ * ny_, 0);
    placed_.assign(pieces_.size(), 0);
    placements_.assign(pieces_.size(), Placement{});
    if (!dfs(0, pieces_.size(), 0.0)) return std::nullopt;
    return placements_;
  }

 private:
  static std::vector<Length> grid(const std::vector<Length>& sums, const Length& limit) {
    std::vector<Length> g;
    for (const auto& s : sums) {
      if (limit < s) break;
      g.push_back(s);
    }
    if (g.back() != limit) g.push_back(limit);
    return g;
  }

  // ends[piece][orientation][start] = grid index of start + extent, or -1.
  std::vector<std::vector<std::vector<int>>> ends(const std::vector<Length>& g, bool along_x) {
    std::vector<std::vector<std::vector<int>>> out(pieces_.size());
    for (std::size_t p = 0; p < pieces_.size(); ++p) {
      for (const auto& o : orientations_[p]) {
        const Length& ext = along_x ? o.w : o.h;
        std::vector<int> row(g.size(), -1);
        for (std::size_t i = 0; i < g.size(); ++i) {
          Length e = g[i] + ext;
          auto it = std::lower_bound(g.begin(), g.end(), e);
          if (it != g.end() && *it == e) row[i] = static_cast<int>(it - g.begin());
        }
        out[p].push_back(std::move(row));
      }
    }
    return out;
  }

  bool dfs(std::size_t cell, std::size_t remaining, double waste) {
    if (++nodes_ > max_nodes_) throw OracleTooLarge();
    if (remaining == 0) return true;
    while (cell < covered_.size() && covered_[cell]) ++cell;
    if (cell == covered_.size()) return false;
    std::size_t cx = cell % nx_;
    std::size_t cy = cell / nx_;

    std::vector<std::size_t> tried_groups;
    for (std::size_t p = 0; p < pieces_.size(); ++p) {
      if (placed_[p]) continue;
      if (std::find(tried_groups.begin(), tried_groups.end(), group_[p]) != tried_groups.end()) {
        continue;
      }
      tried_groups.push_back(group_[p]);
      for (std::size_t o = 0; o < orientations_[p].size(); ++o) {
        int ex = end_x_[p][o][cx];
        int ey = end_y_[p][o][cy];
        if (ex < 0 || ey < 0 || !free_block(cx, cy, ex, ey)) continue;
        fill_block(cx, cy, ex, ey, 1);
        placed_[p] = 1;
        placements_[p] = Placement{p, gx_[cx], gy_[cy], orientations_[p][o].rotated};
        if (dfs(cell + 1, remaining - 1, waste)) return true;
        placed_[p] = 0;
        fill_block(cx, cy, ex, ey, 0);
      }
    }

    double cell_area = cell_w_[cx] * cell_h_[cy];
    if (waste + cell_area <= waste_budget_) {
      covered_[cell] = 2;
      if (dfs(cell + 1, remaining, waste + cell_area)) return true;
      covered_[cell] = 0;
    }
    return false;
  }

  bool free_block(std::size_t x0, std::size_t y0, int x1, int y1) const {
    for (int y = static_cast<int>(y0); y < y1; ++y) {
      for (int x = static_cast<int>(x0); x < x1; ++x) {
        if (covered_[static_cast<std::size_t>(y) * nx_ + static_cast<std::size_t>(x)]) return false;
      }
    }
    return true;
  }

  void fill_block(std::size_t x0, std::size_t y0, int x1, int y1, char value) {
    for (int y = static_cast<int>(y0); y < y1; ++y) {
      for (int x = static_cast<int>(x0); x < x1; ++x) {
        covered_[static_cast<std::size_t>(y) * nx_ + static_cast<std::size_t>(x)] = value;
      }
    }
  }

  std::span<const Piece> pieces_;
  bool rotations_;
  const std::vector<Length>& xsums_;
  const std::vector<Length>& ysums_;
  std::size_t& nodes_;
  std::size_t max_nodes_;
  double total_area_;
  std::vector<std::size_t> group_;
  std::vector<std::vector<Orientation>> orientations_;

  std::vector<Length> gx_, gy_;
  std::size_t nx_ = 0, ny_ = 0;
  std::vector<double> cell_w_, cell_h_;
  std::vector<std::vector<std::vector<int>>> end_x_, end_y_;
  double waste_budget_ = 0.0;
  std::vector<char> covered_;
  std::vector<char> placed_;
  std::vector<Placement> placements_;
};

Length container_cost(Objective objective, const Length& w, const Length& h) {
  return objective_cost(objective, BoundingBox{Length(0), Length(0), w, h});
}

}  // namespace

ExactOpt exact_opt(std::span<const Piece> pieces, Objective objective, bool rotations,
                   const ExactOptLimits& limits) {
  if (pieces.empty()) throw std::invalid_argument("empty stream");
  if (pieces.size() > limits.max_pieces) throw OracleTooLarge();

  std::vector<Length> xsums = subset_sums(pieces, rotations, true);
  std::vector<Length> ysums = subset_sums(pieces, rotations, false);
  std::size_t nodes = 0;
  GridSearch search(pieces, rotations, xsums, ysums, nodes, limits.max_nodes);
  ExactOpt best;
  bool found = false;

  if (objective == Objective::square_area) {
    // Feasibility is monotone in the side, so binary search the candidates.
    std::vector<Length> sides = xsums;
    sides.insert(sides.end(), ysums.begin(), ysums.end());
    sides = sorted_unique(std::move(sides));
    std::size_t lo = 1, hi = sides.size() - 1;
    auto witness = search.solve(sides[hi], sides[hi]);
    if (!witness) throw std::logic_error("exact oracle: largest square infeasible");
    best.witness = std::move(*witness);
    while (lo < hi) {
      std::size_t mid = (lo + hi) / 2;
      if (auto w = search.solve(sides[mid], sides[mid])) {
        hi = mid;
        best.witness = std::move(*w);
      } else {
        lo = mid + 1;
      }
    }
    best.width = best.height = sides[hi];
    best.value = sides[hi] * sides[hi];
    best.nodes = nodes;
    return best;
  }

  // Staircase walk: the least feasible height never grows with the width.
  std::size_t hi = ysums.size() - 1;
  bool have_height = false;
  for (std::size_t xi = 1; xi < xsums.size(); ++xi) {
    const Length& w = xsums[xi];
    if (found && best.value <= container_cost(objective, w, ysums[1])) continue;
    if (!have_height) {
      auto witness = search.solve(w, ysums[hi]);
      if (!witness) continue;
      have_height = true;
      Length cost = container_cost(objective, w, ysums[hi]);
      if (!found || cost < best.value) {
        best = ExactOpt{cost, w, ysums[hi], std::move(*witness), 0};
        found = true;
      }
    }
    while (hi > 1) {
      auto witness = search.solve(w, ysums[hi - 1]);
      if (!witness) break;
      --hi;
      Length cost = container_cost(objective, w, ysums[hi]);
      if (cost < best.value) best = ExactOpt{cost, w, ysums[hi], std::move(*witness), 0};
    }
  }
  if (!found) throw std::logic_error("exact oracle: no feasible container");
  best.nodes = nodes;
  return best;
}

}  // namespace rectpack
