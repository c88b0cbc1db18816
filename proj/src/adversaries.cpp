#include "rectpack/adversaries.hpp"

#include <cmath>
#include <optional>

#include "rectpack/bricks.hpp"

namespace rectpack {

namespace {

class Session {
 public:
  explicit Session(OnlinePacker& packer) : packer_(packer) {}

  void feed(Piece piece) {
    Placement pl = packer_.place(piece);
    pl.piece_index = stream_.size();
    Rect r = placed_rect(piece, pl);
    box_ = box_ ? bounding_box(std::vector<Rect>{*box_, r}) : r;
    stream_.push_back(std::move(piece));
    placements_.push_back(std::move(pl));
  }
  void feed(const Piece& piece, int copies) {
    for (int i = 0; i < copies; ++i) feed(piece);
  }

  const BoundingBox& box() const { return *box_; }
  Length short_side() const { return min(box_->width(), box_->height()); }
  Length long_side() const { return max(box_->width(), box_->height()); }

  AdversaryOutcome finish(std::string name, Objective objective, std::vector<Placement> witness,
                          std::string branch) {
    verify_witness(stream_, witness);
    AdversaryOutcome out;
    out.name = std::move(name);
    out.objective = objective;
    out.alg_cost = objective_cost(objective, *box_);
    out.opt_upper = objective_cost(objective, bounding_box(stream_, witness));
    out.ratio = (out.alg_cost / out.opt_upper).to_double();
    out.stream = std::move(stream_);
    out.placements = std::move(placements_);
    out.witness = std::move(witness);
    out.branch = std::move(branch);
    return out;
  }

 private:
  OnlinePacker& packer_;
  std::vector<Piece> stream_;
  std::vector<Placement> placements_;
  std::optional<BoundingBox> box_;
};

Placement at(std::size_t index, Length x, Length y) {
  return Placement{index, std::move(x), std::move(y), false};
}

Piece unit() { return Piece{Length(1), Length(1)}; }

}  // namespace

void verify_witness(const std::vector<Piece>& stream, const std::vector<Placement>& witness) {
  if (witness.size() != stream.size()) {
    throw InvariantViolation("witness places " + std::to_string(witness.size()) + " of " +
                             std::to_string(stream.size()) + " pieces");
  }
  std::vector<char> seen(stream.size(), 0);
  for (const auto& pl : witness) {
    if (pl.piece_index >= stream.size() || seen[pl.piece_index]) {
      throw InvariantViolation("witness does not place every piece exactly once");
    }
    seen[pl.piece_index] = 1;
  }
  if (!interiors_disjoint(stream, witness)) throw InvariantViolation("witness pieces overlap");
}

AdversaryOutcome adv_perimeter_translation(OnlinePacker& packer, const Length& eps) {
  Session s(packer);
  s.feed(unit(), 2);
  // The bar runs along the shorter side of the box, so both sides reach 2.
  if (s.box().width() <= s.box().height()) {
    s.feed(Piece::make(Length(2), eps));
    return s.finish("peri-trans", Objective::perimeter,
                    {at(0, 0, 0), at(1, 1, 0), at(2, 0, 1)}, "wide-bar");
  }
  s.feed(Piece::make(eps, Length(2)));
  return s.finish("peri-trans", Objective::perimeter,
                  {at(0, 0, 0), at(1, 0, 1), at(2, 1, 0)}, "tall-bar");
}

AdversaryOutcome adv_perimeter_rotation(OnlinePacker& packer, const Length& eps) {
  Session s(packer);
  s.feed(unit(), 3);
  if (s.long_side() < Length(3)) {
    s.feed(Piece::make(eps, Length(3)));
    return s.finish("peri-rot", Objective::perimeter,
                    {at(0, 0, 0), at(1, 0, 1), at(2, 0, 2), at(3, 1, 0)}, "bar");
  }
  s.feed(unit());
  return s.finish("peri-rot", Objective::perimeter,
                  {at(0, 0, 0), at(1, 1, 0), at(2, 0, 1), at(3, 1, 1)}, "square");
}

AdversaryOutcome adv_area_general(OnlinePacker& packer, int m, const Length& p) {
  if (m < 2 || p.sign() <= 0) throw std::invalid_argument("adv_area_general needs m >= 2, p > 0");
  Length m2(static_cast<long>(m) * m);
  Length thin = p / m2;
  Session s(packer);
  int count = m * m;
  s.feed(Piece{p, thin}, count);
  std::vector<Placement> witness;
  if (p / Length(m) <= s.short_side()) {
    for (int i = 0; i < count; ++i) witness.push_back(at(i, p * Length(i), 0));
    s.feed(Piece{p * m2, thin});
    witness.push_back(at(count, 0, thin));
    return s.finish("area-general", Objective::area, std::move(witness), "bar");
  }
  for (int i = 0; i < count; ++i) witness.push_back(at(i, 0, thin * Length(i)));
  s.feed(Piece{p, p});
  witness.push_back(at(count, 0, p));
  return s.finish("area-general", Objective::area, std::move(witness), "square");
}

AdversaryOutcome adv_area_longedge_translation(OnlinePacker& packer, int n) {
  if (n < 2) throw std::invalid_argument("adv_area_longedge_translation needs n >= 2");
  int count = n * n;
  Length n2(count);
  Session s(packer);
  s.feed(unit(), count);
  std::vector<Placement> witness;
  if (s.box().width() <= s.box().height()) {
    for (int i = 0; i < count; ++i) witness.push_back(at(i, i, 0));
    s.feed(Piece{n2, Length(1)});
    witness.push_back(at(count, 0, 1));
    return s.finish("longedge-trans", Objective::area, std::move(witness), "wide-bar");
  }
  for (int i = 0; i < count; ++i) witness.push_back(at(i, 0, i));
  s.feed(Piece{Length(1), n2});
  witness.push_back(at(count, 1, 0));
  return s.finish("longedge-trans", Objective::area, std::move(witness), "tall-bar");
}

AdversaryOutcome adv_area_longedge_rotation(OnlinePacker& packer, int n) {
  if (n < 2) throw std::invalid_argument("adv_area_longedge_rotation needs n >= 2");
  int count = n * n;
  Session s(packer);
  s.feed(unit(), count);
  std::vector<Placement> witness;
  Length a = s.short_side();
  if (Length(n) <= a * a) {
    for (int i = 0; i < count; ++i) witness.push_back(at(i, 0, i));
    s.feed(Piece{Length(1), Length(count)});
    witness.push_back(at(count, 1, 0));
    return s.finish("longedge-rot", Objective::area, std::move(witness), "bar");
  }
  for (int i = 0; i < count; ++i) witness.push_back(at(i, i % n, i / n));
  s.feed(Piece{Length(n), Length(n)});
  witness.push_back(at(count, n, 0));
  return s.finish("longedge-rot", Objective::area, std::move(witness), "square");
}

AdversaryOutcome adv_square_16_9(OnlinePacker& packer) {
  Session s(packer);
  s.feed(unit(), 4);
  if (Length(3) <= s.long_side()) {
    return s.finish("square169", Objective::square_area,
                    {at(0, 0, 0), at(1, 1, 0), at(2, 0, 1), at(3, 1, 1)}, "stop");
  }
  s.feed(Piece{Length(2), Length(2)});
  return s.finish("square169", Objective::square_area,
                  {at(4, 0, 0), at(0, 2, 0), at(1, 2, 1), at(2, 0, 2), at(3, 1, 2)}, "square");
}

namespace {

// Number of level-`level` bricks obtained by splitting `region` all the way down.
std::size_t count_tiles(const Brick& region, int level) {
  if (region.level() == level) return 1;
  auto [a, b] = split(region);
  return count_tiles(a, level) + count_tiles(b, level);
}

struct Ratio4Layout {
  Piece filler;
  Piece first, second, third;
  std::size_t before_second, before_third, last;
};

Ratio4Layout ratio4_layout(int k, const Length& eps) {
  if (k < 5 || k % 2 == 0) throw std::invalid_argument("stream_modified_ratio4 needs odd k >= 5");
  if (eps.sign() <= 0) throw std::invalid_argument("stream_modified_ratio4 needs eps > 0");
  Ratio4Layout l{
      Piece{Length::sqrt2_pow(-k - 1) + eps, Length::sqrt2_pow(-k) + eps},
      // Levels 1, 2 and 3: they land in B_{>1}, B_1+2 and B_0+1+1+2.
      Piece{eps, Length::sqrt2_pow(-3) + eps},
      Piece{Length::ratio(1, 4) + eps, eps},
      Piece{eps, Length::sqrt2_pow(-5) + eps},
      0, 0, 0};
  int filler_level = suitable_level(l.filler);
  Brick b1 = Brick::fundamental_brick(1);
  Brick b0 = Brick::fundamental_brick(0);
  l.before_second = count_tiles(b1.child(1), filler_level);
  l.before_third = count_tiles(b0.child(1).child(1).child(1), filler_level);
  l.last = count_tiles(b0.child(1).child(2).child(1), filler_level);
  return l;
}

}  // namespace

std::vector<Piece> stream_modified_ratio4(int k, const Length& eps) {
  Ratio4Layout l = ratio4_layout(k, eps);
  std::vector<Piece> out;
  out.push_back(l.first);
  out.insert(out.end(), l.before_second, l.filler);
  out.push_back(l.second);
  out.insert(out.end(), l.before_third, l.filler);
  out.push_back(l.third);
  out.insert(out.end(), l.last, l.filler);
  return out;
}

std::vector<Placement> modified_ratio4_witness(int k, const Length& eps) {
  Ratio4Layout l = ratio4_layout(k, eps);
  std::size_t fillers = l.before_second + l.before_third + l.last;
  auto cols = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(fillers))));
  std::size_t rows = (fillers + cols - 1) / cols;
  Length grid_w = l.filler.width * Length(static_cast<long>(cols));
  Length grid_h = l.filler.height * Length(static_cast<long>(rows));

  std::vector<Placement> w;
  std::size_t filler_no = 0;
  auto add_fillers = [&](std::size_t count) {
    for (std::size_t i = 0; i < count; ++i, ++filler_no) {
      w.push_back(at(w.size(), l.filler.width * Length(static_cast<long>(filler_no % cols)),
                     l.filler.height * Length(static_cast<long>(filler_no / cols))));
    }
  };
  // Grid of fillers, the two thin uprights to its right, the flat bar on top.
  w.push_back(at(0, grid_w, 0));
  add_fillers(l.before_second);
  w.push_back(at(w.size(), 0, grid_h));
  add_fillers(l.before_third);
  w.push_back(at(w.size(), grid_w + eps, 0));
  add_fillers(l.last);
  return w;
}

std::size_t fekete_count(int k) {
  if (k < 1) throw std::invalid_argument("fekete_count needs k >= 1");
  // Squares fill B_k, ..., B_1 completely and then B_0 in order up to the
  // first k-brick that touches the top edge of B_0.
  std::size_t inside_b0 = 0;
  Brick b = Brick::fundamental_brick(0);
  while (b.level() < k) {
    std::uint8_t step = b.level() % 2 == 0 ? 1 : 2;
    inside_b0 = inside_b0 * 2 + (step - 1);
    b = b.child(step);
  }
  if (brick_rect(b).y_max != fundamental_rect(0).y_max) {
    throw std::logic_error("fekete_count: corner brick misses the top edge");
  }
  return ((std::size_t{1} << k) - 1) + inside_b0 + 1;
}

std::vector<Piece> stream_fekete_tightness(int k, const Length& eps) {
  Length side = Length::sqrt2_pow(-k) * (Length::ratio(1, 2) + eps);
  return std::vector<Piece>(fekete_count(k), Piece::make(side, side));
}

std::vector<Placement> square_grid_witness(std::size_t count, const Length& side) {
  auto cols = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(count))));
  while (cols * cols < count) ++cols;
  std::vector<Placement> w;
  for (std::size_t i = 0; i < count; ++i) {
    w.push_back(at(i, side * Length(static_cast<long>(i % cols)),
                   side * Length(static_cast<long>(i / cols))));
  }
  return w;
}

AdversaryOutcome play_stream(OnlinePacker& packer, std::string name, Objective objective,
                             std::vector<Piece> stream, std::vector<Placement> witness) {
  Session s(packer);
  for (const auto& p : stream) s.feed(p);
  return s.finish(std::move(name), objective, std::move(witness), "fixed");
}

}  // namespace rectpack
