#pragma once

#include <string>
#include <vector>

#include "rectpack/oracles.hpp"
#include "rectpack/packer.hpp"

namespace rectpack {

/// Result of playing a stream against an online packer. The adversaries only
/// look at the placements the packer returns.
struct AdversaryOutcome {
  std::string name;
  Objective objective = Objective::perimeter;
  std::vector<Piece> stream;
  std::vector<Placement> placements;  // the packer's
  Length alg_cost;
  Length opt_upper;  // cost of `witness`
  std::vector<Placement> witness;
  double ratio = 0.0;
  std::string branch;
};

/// Two unit squares, then a bar of length 2 and thickness eps laid along the
/// shorter side of their bounding box. OPT <= 6 + 2 eps.
AdversaryOutcome adv_perimeter_translation(OnlinePacker& packer, const Length& eps);
/// Three unit squares; then an eps x 3 bar if the box's long side is below 3
/// (OPT <= 8 + 2 eps), else a fourth square (OPT <= 8).
AdversaryOutcome adv_perimeter_rotation(OnlinePacker& packer, const Length& eps);
/// m^2 bars p x p/m^2, then a pm^2 x p/m^2 bar if both box sides reach p/m,
/// else a p x p square. OPT <= 2p^2 either way.
AdversaryOutcome adv_area_general(OnlinePacker& packer, int m, const Length& p);
/// n^2 unit squares, then an n^2 x 1 bar across the shorter box side.
AdversaryOutcome adv_area_longedge_translation(OnlinePacker& packer, int n);
/// n^2 unit squares, then a 1 x n^2 bar if the short box side is at least
/// sqrt(n), else an n x n square.
AdversaryOutcome adv_area_longedge_rotation(OnlinePacker& packer, int n);
/// Four unit squares; stop if the bounding square has side >= 3, else add a
/// 2 x 2 square.
AdversaryOutcome adv_square_16_9(OnlinePacker& packer);

/// Fixed stream that drives the modified brick packer towards a box near
/// [0,1] x [0,sqrt2] while everything fits in a 3-brick. `k` odd, >= 5.
std::vector<Piece> stream_modified_ratio4(int k, const Length& eps);
/// Packing of that stream into a container of about the size of B_3.
std::vector<Placement> modified_ratio4_witness(int k, const Length& eps);

/// n_k copies of a square of side sqrt2^-k (1/2 + eps): just enough that the
/// brick packers' bounding square reaches side sqrt2 while the squares cover
/// only about a sixth of it.
std::vector<Piece> stream_fekete_tightness(int k, const Length& eps);
std::size_t fekete_count(int k);
/// Grid packing of `count` equal squares in ceil(sqrt(count)) columns.
std::vector<Placement> square_grid_witness(std::size_t count, const Length& side);

/// Plays a fixed stream with a known witness against the packer.
AdversaryOutcome play_stream(OnlinePacker& packer, std::string name, Objective objective,
                             std::vector<Piece> stream, std::vector<Placement> witness);

/// Throws InvariantViolation unless the witness is an interior-disjoint
/// placement of every piece exactly once.
void verify_witness(const std::vector<Piece>& stream, const std::vector<Placement>& witness);

}  // namespace rectpack
