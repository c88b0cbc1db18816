// Acceptance suite: one [PASS]/[FAIL] line per criterion, nonzero exit on any
// failure. Every criterion is deterministic (fixed seeds).

#include <chrono>
#include <climits>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "rectpack/adversaries.hpp"
#include "rectpack/brick_packers.hpp"
#include "rectpack/dynbox.hpp"
#include "rectpack/harness.hpp"
#include "rectpack/oracles.hpp"
#include "rectpack/shelves.hpp"
#include "support.hpp"

using namespace rectpack;
using namespace rectpack::testing;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
};

std::string fmt(double v, int digits = 4) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

double bbox_cost(Objective obj, const std::vector<Piece>& pieces,
                 const std::vector<Placement>& placements) {
  return objective_cost(obj, bounding_box(pieces, placements)).to_double();
}

const std::vector<std::string> kBrickPackers{"brick-translation", "brick-rotation",
                                             "brick-modified"};
const std::vector<std::string> kAreaPackers{"dynbox-trans", "dynbox-rot", "dynbox-rot-opt4",
                                            "dynbox-rot-combined"};

Verdict perimeter_below_four() {
  Verdict v;
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> nd(1, 60);
  double worst = 0;
  for (std::uint64_t s = 1; s <= 500; ++s) {
    auto stream = random_stream(s, static_cast<std::size_t>(nd(rng)));
    for (BrickVariant bv : {BrickVariant::translation, BrickVariant::rotation}) {
      auto placements = run_stream(bv, stream);
      double lb = lower_bound_perimeter(stream, bv == BrickVariant::rotation).value;
      double r = bbox_cost(Objective::perimeter, stream, placements) / lb;
      worst = std::max(worst, r);
      if (!(r < 4.0)) v.pass = false;
    }
  }
  v.detail = "max perimeter/LB over 1000 runs = " + fmt(worst);
  return v;
}

Verdict modified_inferiority() {
  Verdict v;
  Length eps = Length::ratio(1, 10000);
  auto stream = stream_modified_ratio4(11, eps);
  auto witness = modified_ratio4_witness(11, eps);
  BrickPacker modified(BrickVariant::modified);
  auto m = play_stream(modified, "modified-ratio4", Objective::perimeter, stream, witness);
  BrickPacker translation(BrickVariant::translation);
  auto t = play_stream(translation, "modified-ratio4", Objective::perimeter, stream, witness);
  v.pass = m.ratio >= 3.5 && t.ratio < 4.0;
  v.detail = "modified " + fmt(m.ratio) + " (>= 3.5), translation " + fmt(t.ratio) + " (< 4)";
  return v;
}

Verdict square_tightness() {
  Verdict v;
  auto stream = stream_fekete_tightness(10, Length::ratio(1, 1000));
  auto witness = square_grid_witness(stream.size(), stream.front().width);
  BrickPacker packer(BrickVariant::translation);
  auto out = play_stream(packer, "fekete-tightness", Objective::square_area, stream, witness);
  bool floor_ok = out.ratio >= 5.5;

  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> nd(1, 4);
  std::uniform_int_distribution<int> side(1, 64);
  double worst = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Piece> squares;
    for (int i = nd(rng); i > 0; --i) {
      Length a = Length::ratio(side(rng), 16);
      squares.push_back(Piece{a, a});
    }
    double opt = exact_opt(squares, Objective::square_area, false).value.to_double();
    for (BrickVariant bv : {BrickVariant::translation, BrickVariant::rotation}) {
      double r = bbox_cost(Objective::square_area, squares, run_stream(bv, squares)) / opt;
      worst = std::max(worst, r);
    }
  }
  bool ceiling_ok = worst <= 6 + 1e-9;
  v.pass = floor_ok && ceiling_ok;
  v.detail = "tightness stream " + fmt(out.ratio) + " (>= 5.5, n=" +
             std::to_string(stream.size()) + "), max exact ratio on small square streams " +
             fmt(worst) + " (<= 6)";
  return v;
}

Verdict adversary_floors() {
  Verdict v;
  std::ostringstream detail;
  auto need = [&](const std::string& what, double ratio, double floor) {
    if (!(ratio >= floor)) {
      v.pass = false;
      detail << what << " " << fmt(ratio) << " < " << fmt(floor) << "; ";
    }
  };
  double min_pt = 1e9, min_pr = 1e9, min_sq = 1e9, min_ag = 1e9;
  Length eps = Length::ratio(1, 10000);
  for (const auto& name : kBrickPackers) {
    auto a = make_packer(name);
    double r = adv_perimeter_translation(*a, eps).ratio;
    need("peri-trans vs " + name, r, 4.0 / 3 - 0.01);
    min_pt = std::min(min_pt, r);
    auto b = make_packer(name);
    r = adv_perimeter_rotation(*b, eps).ratio;
    need("peri-rot vs " + name, r, 5.0 / 4 - 0.01);
    min_pr = std::min(min_pr, r);
    auto c = make_packer(name);
    r = adv_square_16_9(*c).ratio;
    need("square169 vs " + name, r, 16.0 / 9 - 0.01);
    min_sq = std::min(min_sq, r);
  }
  for (const auto& name : kAreaPackers) {
    for (int p : {1, 36}) {
      auto a = make_packer(name);
      double r = adv_area_general(*a, 6, Length(p)).ratio;
      need("area-general p=" + std::to_string(p) + " vs " + name, r, 3.0);
      min_ag = std::min(min_ag, r);
    }
  }
  DynBoxPacker trans(DynBoxVariant::trans);
  double lt = adv_area_longedge_translation(trans, 8).ratio;
  need("longedge-trans", lt, 4.0);
  DynBoxPacker rot(DynBoxVariant::rot);
  double lr = adv_area_longedge_rotation(rot, 16).ratio;
  need("longedge-rot", lr, 2.0);
  detail << "min peri-trans " << fmt(min_pt) << ", peri-rot " << fmt(min_pr) << ", square169 "
         << fmt(min_sq) << ", area-general " << fmt(min_ag) << ", longedge-trans " << fmt(lt)
         << ", longedge-rot " << fmt(lr);
  v.detail = detail.str();
  return v;
}

Verdict shelf_density() {
  Verdict v;
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_int_distribution<int> kd(-3, 5);
  int qualifying = 0, violations = 0;
  double worst = 1e9;
  while (qualifying < 10000) {
    int k = kd(rng);
    ShelfState box(k);
    double hspread = 1 + 7 * u(rng);
    int extra = static_cast<int>(u(rng) * 40);
    for (int guard = 0; guard < 5000; ++guard) {
      long w = std::max(1L, std::lround(std::exp2(k - 10 * u(rng)) * 65536));
      long h = std::max(1L, std::lround(std::exp2(k + 1 - hspread * u(rng)) * 65536));
      box.nfs_place(Piece{Length::ratio(w, 65536), Length::ratio(h, 65536)}, 1e300);
      auto r = density_report(box);
      if (r.total_shelf_height >= box.max_piece_height() * 6 && extra-- <= 0) break;
    }
    auto r = density_report(box);
    if (r.total_shelf_height < box.max_piece_height() * 6) continue;
    ++qualifying;
    double d = (r.piece_area / r.box_area_used).to_double();
    worst = std::min(worst, d);
    if (r.piece_area * 12 < r.box_area_used) ++violations;
  }
  v.pass = violations == 0;
  v.detail = std::to_string(qualifying) + " fills, " + std::to_string(violations) +
             " violations, min density " + fmt(worst) + " (>= 1/12)";
  return v;
}

double dynbox_ratio(const std::string& algorithm, const std::vector<Piece>& stream) {
  auto packer = make_packer(algorithm);
  std::vector<Placement> placements;
  for (const auto& p : stream) placements.push_back(packer->place(p));
  bool rot = packer->allows_rotation();
  return bbox_cost(Objective::area, stream, placements) / lower_bound_area(stream, rot).value;
}

Verdict sqrt_n_ceiling() {
  Verdict v;
  const double C = 64;
  std::ostringstream detail;
  for (std::size_t n : {25, 100, 400}) {
    double worst = 0;
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
      GenParams p;
      p.n = n;
      p.seed = seed;
      auto stream = generate("uniform", p);
      for (const char* alg : {"dynbox-trans", "dynbox-rot"}) {
        double r = dynbox_ratio(alg, stream) / std::sqrt(double(n));
        worst = std::max(worst, r);
        if (r > C) v.pass = false;
      }
    }
    detail << "n=" << n << " max ratio/sqrt(n) " << fmt(worst) << "; ";
  }
  v.detail = detail.str() + "ceiling C=64";
  return v;
}

Verdict combined_dominance() {
  Verdict v;
  const double C = 64;
  double worst_ceiling = 0, worst_rel = 0;
  for (std::size_t n : {25, 100, 400}) {
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
      GenParams p;
      p.n = n;
      p.seed = seed;
      auto stream = generate("long-edge", p);
      double lb = lower_bound_area(stream, true).value;
      double comb = dynbox_ratio("dynbox-rot-combined", stream);
      double best = std::min(dynbox_ratio("dynbox-rot", stream),
                             dynbox_ratio("dynbox-rot-opt4", stream));
      double c = comb / std::min(std::sqrt(double(n)), std::pow(lb, 0.25));
      double rel = comb / best;
      worst_ceiling = std::max(worst_ceiling, c);
      worst_rel = std::max(worst_rel, rel);
      if (c > C || rel > 4) v.pass = false;
    }
  }
  v.detail = "max ratio/min(sqrt n, LB^1/4) " + fmt(worst_ceiling) +
             " (<= 64), max combined/best-of-two " + fmt(worst_rel) + " (<= 4)";
  return v;
}

Verdict oracle_soundness() {
  Verdict v;
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> nd(1, 4);
  int mismatches = 0, below_lb = 0, bad_witness = 0, checks = 0;
  for (int trial = 0; trial < 50; ++trial) {
    auto pieces = random_integer_stream(rng, static_cast<std::size_t>(nd(rng)), 4);
    for (Objective obj : {Objective::area, Objective::perimeter}) {
      for (bool rot : {false, true}) {
        ++checks;
        auto got = exact_opt(pieces, obj, rot);
        if (got.value != brute_force_opt(pieces, obj, rot)) ++mismatches;
        if (got.value.to_double() < lower_bound(pieces, obj, rot).value * (1 - 1e-12)) ++below_lb;
        if (!interiors_disjoint(pieces, got.witness) || got.witness.size() != pieces.size()) {
          ++bad_witness;
        }
      }
    }
  }
  v.pass = mismatches == 0 && below_lb == 0 && bad_witness == 0;
  v.detail = std::to_string(checks) + " checks: " + std::to_string(mismatches) +
             " brute-force mismatches, " + std::to_string(below_lb) + " below LB, " +
             std::to_string(bad_witness) + " bad witnesses";
  return v;
}

Verdict structural_invariants() {
  Verdict v;
  int streams = 0;
  std::vector<std::string> problems;
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    auto stream = random_stream(1000 + seed, 60);
    for (BrickVariant bv :
         {BrickVariant::translation, BrickVariant::rotation, BrickVariant::modified}) {
      ++streams;
      std::vector<Rect> rects;
      run_stream(bv, stream, [&](const BrickPacker& packer, const Placement& pl) {
        rects.push_back(placed_rect(stream[pl.piece_index], pl));
        if (!last_is_disjoint(rects)) problems.push_back("brick overlap");
        if (bv != BrickVariant::modified) {
          auto bad = brick_remark_violations(packer);
          problems.insert(problems.end(), bad.begin(), bad.end());
        }
      });
    }
    for (DynBoxVariant dv : {DynBoxVariant::trans, DynBoxVariant::rot, DynBoxVariant::rot_opt4,
                             DynBoxVariant::rot_combined}) {
      ++streams;
      DynBoxPacker packer(dv);
      std::vector<Rect> rects;
      double last_t = 0;
      int last_active = INT_MIN;
      for (const auto& p : stream) {
        rects.push_back(placed_rect(p, packer.place(p)));
        if (!last_is_disjoint(rects)) problems.push_back("dynbox overlap");
        if (packer.current_threshold() < last_t) problems.push_back("threshold decreased");
        if (*packer.active() < last_active) problems.push_back("active index decreased");
        last_t = packer.current_threshold();
        last_active = *packer.active();
        for (const auto& [k, box] : packer.boxes()) {
          std::map<int, int> sparse;
          for (const auto& s : box.shelves()) {
            if (!box.is_dense(s) && ++sparse[s.height_class] > 1) {
              problems.push_back("two sparse shelves in one class");
            }
          }
        }
      }
    }
  }
  v.pass = problems.empty();
  v.detail = std::to_string(streams) + " streams checked after every prefix, " +
             std::to_string(problems.size()) + " violations";
  if (!problems.empty()) v.detail += " (first: " + problems.front() + ")";
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"perimeter ratio below 4 on random streams", perimeter_below_four},
      {"modified packer reaches ratio near 4", modified_inferiority},
      {"bounding-square ratio 6 is tight", square_tightness},
      {"adversary floors", adversary_floors},
      {"shelf density at least 1/12", shelf_density},
      {"dynamic boxes within C*sqrt(n)", sqrt_n_ceiling},
      {"combined variant dominance", combined_dominance},
      {"exact oracle soundness", oracle_soundness},
      {"structural invariants", structural_invariants},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > 60) {
      v.pass = false;
      v.detail += " (took over 60 s)";
    }
    if (!v.pass) ++failed;
    std::printf("[%s] %zu %s: %s [%.1f s]\n", v.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), v.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
