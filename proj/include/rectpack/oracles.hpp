#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rectpack/geometry.hpp"

namespace rectpack {

enum class Objective { perimeter, area, square_area };
enum class OptKind { exact, lower, witness };

const char* to_string(Objective objective);
const char* to_string(OptKind kind);
/// Accepts "perimeter", "area", "square" and "square_area"; throws ConfigError.
Objective parse_objective(const std::string& text);

/// Cost of a bounding box under the objective.
Length objective_cost(Objective objective, const BoundingBox& box);

struct OptBound {
  OptKind kind = OptKind::lower;
  Objective objective = Objective::area;
  bool rotations = false;
  double value = 0.0;
  std::optional<Length> exact;  // when the value is representable
};

/// Perimeter of the smallest box that could hold the pieces: the box must
/// hold the longest edge L and total area A, and must be at least as wide and
/// tall as every piece (up to rotation).
OptBound lower_bound_perimeter(std::span<const Piece> pieces, bool rotations);
/// max(total area, widest * tallest), with long/short sides under rotation.
OptBound lower_bound_area(std::span<const Piece> pieces, bool rotations);
/// max(total area, longest edge squared).
OptBound lower_bound_square(std::span<const Piece> pieces, bool rotations);
OptBound lower_bound(std::span<const Piece> pieces, Objective objective, bool rotations);

class OracleTooLarge : public std::runtime_error {
 public:
  OracleTooLarge() : std::runtime_error("instance too large for exact oracle") {}
};

struct ExactOptLimits {
  std::size_t max_pieces = 6;
  std::size_t max_nodes = 1'000'000;
};

struct ExactOpt {
  Length value;
  Length width;  // container of the witness
  Length height;
  std::vector<Placement> witness;
  std::size_t nodes = 0;
};

/// Minimum objective over all interior-disjoint packings, with a witness.
/// Throws OracleTooLarge beyond the limits and std::invalid_argument on an
/// empty instance.
ExactOpt exact_opt(std::span<const Piece> pieces, Objective objective, bool rotations,
                   const ExactOptLimits& limits = {});

}  // namespace rectpack
