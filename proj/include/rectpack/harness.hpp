#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "rectpack/adversaries.hpp"
#include "rectpack/oracles.hpp"
#include "rectpack/packer.hpp"

namespace rectpack {

/// One piece per line, "<width> <height>"; '#' starts a comment. Tokens are
/// anything parse_length accepts. Throws ParseError naming the line.
std::vector<Piece> parse_stream(std::string_view text);
/// Inverse of parse_stream, using exact forms.
std::string format_stream(std::span<const Piece> pieces);

struct GenParams {
  std::size_t n = 20;
  std::uint64_t seed = 1;
  int k = 11;
  Length eps = Length::ratio(1, 1000);
};

/// uniform, squares, unit-squares, long-edge, modified-ratio4,
/// fekete-tightness.
const std::vector<std::string>& generator_names();
/// Throws ConfigError on an unknown generator.
std::vector<Piece> generate(std::string_view name, const GenParams& params);

struct RunOptions {
  std::string algorithm;
  Objective objective = Objective::perimeter;
  /// Rotation setting of the offline optimum; defaults to the algorithm's.
  std::optional<bool> rotations;
  ExactOptLimits limits;
};

struct RunReport {
  std::string algorithm;
  Objective objective = Objective::perimeter;
  bool rotations = false;
  std::vector<Piece> pieces;
  std::vector<Placement> placements;
  std::vector<Overlay> overlays;
  BoundingBox box;
  Length alg_cost;
  OptKind opt_kind = OptKind::lower;
  double opt_value = 0.0;
  std::optional<Length> opt_exact;
  double ratio = 0.0;
  std::string branch;  // adversary runs only
  double wall_time = 0.0;
};

/// Throws ConfigError for an empty stream or an algorithm that does not serve
/// the objective, and InvariantViolation if the packing overlaps or leaves a
/// piece outside its container.
RunReport run(std::span<const Piece> pieces, const RunOptions& options);
RunReport report_from_outcome(const AdversaryOutcome& outcome, std::string algorithm,
                              bool rotations);

/// Pieces are interior-disjoint and each lies in one of the packer's
/// containers (bricks or boxes) when the packer reports any.
void verify_packing(std::span<const Piece> pieces, std::span<const Placement> placements,
                    std::span<const Overlay> overlays);

nlohmann::json to_json(const RunReport& report, bool with_wall_time = true);
RunReport report_from_json(const nlohmann::json& doc);
std::string csv_header();
std::string csv_row(const RunReport& report, std::size_t trial);

struct SvgOptions {
  bool overlays = true;
  double size = 800.0;  // width of the drawing in px
};

/// Throws std::invalid_argument for a report without placements.
std::string render_svg(const RunReport& report, const SvgOptions& options = {});

}  // namespace rectpack
