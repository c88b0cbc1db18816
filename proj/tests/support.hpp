// Shared test helpers: an unpruned brute-force OPT, structural checkers for
// packer states, and seeded stream builders.
#pragma once

#include <algorithm>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "rectpack/brick_packers.hpp"
#include "rectpack/bricks.hpp"
#include "rectpack/dynbox.hpp"
#include "rectpack/harness.hpp"
#include "rectpack/oracles.hpp"

namespace rectpack::testing {

inline std::vector<Length> all_subset_sums(const std::vector<Piece>& pieces, bool rotations,
                                           bool along_x) {
  std::vector<Length> sums{Length(0)};
  for (const auto& p : pieces) {
    std::vector<Length> next = sums;
    for (const auto& s : sums) {
      next.push_back(s + (along_x ? p.width : p.height));
      if (rotations) next.push_back(s + (along_x ? p.height : p.width));
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    sums = std::move(next);
  }
  return sums;
}

/// Places pieces in index order at every anchor pair, checking only overlap
/// and containment; true if all pieces fit in W x H.
inline bool brute_fits(const std::vector<Piece>& pieces, bool rotations,
                       const std::vector<Length>& xs, const std::vector<Length>& ys,
                       const Length& W, const Length& H, std::vector<Rect>& placed) {
  std::size_t i = placed.size();
  if (i == pieces.size()) return true;
  for (int o = 0; o < (rotations ? 2 : 1); ++o) {
    Length w = o ? pieces[i].height : pieces[i].width;
    Length h = o ? pieces[i].width : pieces[i].height;
    for (const auto& x : xs) {
      if (W < x + w) break;
      for (const auto& y : ys) {
        if (H < y + h) break;
        Rect r{x, y, x + w, y + h};
        bool clash = std::any_of(placed.begin(), placed.end(),
                                 [&](const Rect& q) { return q.interiors_overlap(r); });
        if (clash) continue;
        placed.push_back(r);
        if (brute_fits(pieces, rotations, xs, ys, W, H, placed)) return true;
        placed.pop_back();
      }
    }
  }
  return false;
}

/// Minimum objective over every container built from subset sums.
inline Length brute_force_opt(const std::vector<Piece>& pieces, Objective objective,
                              bool rotations) {
  auto xs = all_subset_sums(pieces, rotations, true);
  auto ys = all_subset_sums(pieces, rotations, false);
  Length total(0);
  for (const auto& p : pieces) total += p.area();
  std::optional<Length> best;
  for (const auto& W : xs) {
    for (const auto& H : ys) {
      if (W.sign() == 0 || H.sign() == 0 || W * H < total) continue;
      std::vector<Rect> placed;
      if (!brute_fits(pieces, rotations, xs, ys, W, H, placed)) continue;
      Length cost = objective_cost(objective, bounding_box(placed));
      if (!best || cost < *best) best = cost;
    }
  }
  return *best;
}

/// Stream with dims log-uniform in [2^lo, 2^hi] (exact dyadics).
inline std::vector<Piece> random_stream(std::uint64_t seed, std::size_t n, double lo = -6,
                                        double hi = 6) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> e(lo, hi);
  std::vector<Piece> out;
  for (std::size_t i = 0; i < n; ++i) {
    long w = std::max(1L, std::lround(std::exp2(e(rng)) * 1048576.0));
    long h = std::max(1L, std::lround(std::exp2(e(rng)) * 1048576.0));
    out.push_back(Piece{Length::ratio(w, 1048576), Length::ratio(h, 1048576)});
  }
  return out;
}

inline std::vector<Piece> random_integer_stream(std::mt19937_64& rng, std::size_t n, int max_side) {
  std::uniform_int_distribution<int> d(1, max_side);
  std::vector<Piece> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(Piece{Length(d(rng)), Length(d(rng))});
  return out;
}

/// Violations of the brick-state remarks after normalization: dense bricks
/// hold a quarter of their area, every piece is at least half as long as the
/// brick across the stacking axis, at most one sparse and one empty k-brick
/// per level k >= 1, no empty 0-brick, and free flags in precedes order over
/// the k-bricks lying in no strictly larger empty or occupied brick are
/// monotone.
inline std::vector<std::string> brick_remark_violations(const BrickPacker& packer) {
  std::vector<std::string> bad;
  const auto& stacks = packer.stacks();
  if (stacks.empty()) return bad;
  BrickClassification c = classify(stacks);

  std::map<int, int> sparse_per_level, empty_per_level;
  int max_level = 0;
  for (const auto& s : stacks) {
    Brick b = c.normalize(s.brick());
    int k = b.level();
    max_level = std::max(max_level, k);
    Rect r = s.rect();
    Length area(0);
    bool even = s.level() % 2 == 0;  // geometry follows the unshifted level
    Length across = even ? r.width() : r.height();
    for (const auto& sp : s.pieces()) {
      area += sp.piece.area();
      const Length& ext = even ? sp.piece.width : sp.piece.height;
      if (ext * 2 < across) bad.push_back("short piece in " + b.to_string());
    }
    BrickLabel label = *c.label_of(b);
    if (label == BrickLabel::dense && area * 4 < r.width() * r.height()) {
      bad.push_back("dense brick below 1/4: " + b.to_string());
    }
    if (label == BrickLabel::sparse) ++sparse_per_level[k];
  }
  for (const auto& [b, label] : c.labels) {
    if (label == BrickLabel::empty) ++empty_per_level[b.level()];
  }
  for (int i = c.empty_tail_from; i <= max_level + 1; ++i) ++empty_per_level[i];
  for (auto [k, count] : sparse_per_level) {
    if (k >= 1 && count > 1) bad.push_back("two sparse bricks at level " + std::to_string(k));
  }
  for (auto [k, count] : empty_per_level) {
    if (k >= 1 && count > 1) bad.push_back("two empty bricks at level " + std::to_string(k));
    if (k == 0 && count > 0) bad.push_back("empty 0-brick");
  }

  for (int k = 0; k <= max_level + 1; ++k) {
    std::vector<std::pair<Brick, bool>> set;  // (brick, free)
    if (k >= c.empty_tail_from) set.emplace_back(Brick::fundamental_brick(k), true);
    std::function<void(const Brick&)> walk = [&](const Brick& node) {
      bool occupied = c.occupied.contains(node);
      bool untouched = !occupied && !c.occupied.has_occupied_descendant(node);
      if (node.level() == k) {
        set.emplace_back(node, !occupied && untouched);
        return;
      }
      if (occupied || untouched) return;  // everything below sits in a larger brick
      walk(node.child(1));
      walk(node.child(2));
    };
    for (int i = std::min(k, c.empty_tail_from - 1); i >= 0; --i) {
      walk(Brick::fundamental_brick(i));
    }
    bool seen_free = false;
    for (std::size_t i = 0; i < set.size(); ++i) {
      if (i > 0 && !precedes(set[i - 1].first, set[i].first)) {
        bad.push_back("walk order is not precedes order at level " + std::to_string(k));
      }
      if (set[i].second) {
        seen_free = true;
      } else if (seen_free) {
        bad.push_back("occupied " + set[i].first.to_string() + " follows a free brick");
      }
    }
  }
  return bad;
}

/// Disjointness of the newest placement against all earlier ones.
inline bool last_is_disjoint(const std::vector<Rect>& rects) {
  const Rect& r = rects.back();
  for (std::size_t i = 0; i + 1 < rects.size(); ++i) {
    if (rects[i].interiors_overlap(r)) return false;
  }
  return true;
}

}  // namespace rectpack::testing
