#include <doctest.h>

#include "printing.hpp"

#include <optional>
#include <vector>

#include "rectpack/geometry.hpp"

using namespace rectpack;

namespace {

Placement at(std::size_t i, Length x, Length y) { return Placement{i, x, y, false}; }

}  // namespace

TEST_CASE("length arithmetic stays exact in Q(sqrt2)") {
  for (int k = -60; k <= 60; ++k) {
    Length r = Length::sqrt2_pow(-k);
    CHECK(r * r == Length::pow2(-k));
  }
  Length s = Length::sqrt2_pow(1);
  CHECK(s.to_string() == "sqrt2");
  CHECK((s / 2).to_string() == "1/2*sqrt2");
  CHECK((Length(1) + s * 3).to_string() == "1+3*sqrt2");
  CHECK((Length(1) / (Length(1) + s)) == s - Length(1));
  CHECK(Length::ratio(3, 4).to_string() == "3/4");
  CHECK(Length::from_double(0.375) == Length::ratio(3, 8));
}

TEST_CASE("length comparison decides near ties exactly") {
  // 99/70 is a convergent of sqrt2, 1e-4 apart.
  Length s = Length::sqrt2_pow(1);
  CHECK(s < Length::ratio(99, 70));
  CHECK(Length::ratio(140, 99) < s);
  Length a = s + Length::pow2(-60);
  CHECK(s < a);
  CHECK(a - s == Length::pow2(-60));
  CHECK((s * s - 2).is_zero());
}

TEST_CASE("parse_length accepts the exact forms") {
  CHECK(parse_length("0.25") == Length::ratio(1, 4));
  CHECK(parse_length("1e-3") == Length::ratio(1, 1000));
  CHECK(parse_length("3/8") == Length::ratio(3, 8));
  CHECK(parse_length("sqrt2") == Length::sqrt2_pow(1));
  CHECK(parse_length("1/2*sqrt2") == Length::sqrt2_pow(-1));
  CHECK(parse_length("0.5*sqrt2") == Length::sqrt2_pow(-1));
  CHECK(parse_length("1+3*sqrt2") == Length(1) + Length::sqrt2_pow(1) * 3);
  CHECK(parse_length("-1/8*sqrt2") == -(Length::sqrt2_pow(1) / 8));
  CHECK_THROWS_AS(parse_length("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_length("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_length(""), std::invalid_argument);
  for (const auto& v : {Length::ratio(7, 3), Length::sqrt2_pow(-5) + Length::ratio(-2, 9)}) {
    CHECK(parse_length(v.to_string()) == v);
  }
}

TEST_CASE("bounding box") {
  std::vector<Piece> one{Piece{1, 1}};
  CHECK(bounding_box(one, std::vector<Placement>{at(0, 0, 0)}) == Rect{0, 0, 1, 1});

  std::vector<Piece> two{Piece{1, 1}, Piece{1, 1}};
  CHECK(bounding_box(two, std::vector<Placement>{at(0, 0, 0), at(1, 1, 0)}) == Rect{0, 0, 2, 1});

  std::vector<Piece> four(4, Piece{1, 1});
  std::vector<Placement> grid{at(0, 0, 0), at(1, 1, 0), at(2, 0, 1), at(3, 1, 1)};
  CHECK(bounding_box(four, grid) == Rect{0, 0, 2, 2});

  CHECK_THROWS_WITH_AS(bounding_box(std::vector<Rect>{}), "empty packing", std::invalid_argument);
}

TEST_CASE("bounding box never shrinks when a placement is added") {
  std::vector<Rect> rects;
  std::optional<Rect> prev;
  for (int i = 0; i < 20; ++i) {
    rects.push_back(Rect{Length(i % 5), Length(-i % 3), Length(i % 5 + 1), Length(i)});
    Rect box = bounding_box(rects);
    if (prev) CHECK(box.contains(*prev));
    prev = box;
  }
}

TEST_CASE("costs") {
  Rect unit{0, 0, 1, 1};
  CHECK(perimeter_cost(unit) == Length(4));
  Length eps = Length::ratio(1, 100);
  CHECK(perimeter_cost(Rect{0, 0, 2, eps}) == Length(4) + eps * 2);
  Rect b0{0, 0, 1, Length::sqrt2_pow(1)};
  CHECK(perimeter_cost(b0) == Length(2) + Length::sqrt2_pow(1) * 2);
  CHECK(semiperimeter(b0) == Length(1) + Length::sqrt2_pow(1));

  Rect r23{0, 0, 2, 3};
  CHECK(area_cost(r23) == Length(6));
  CHECK(square_area_cost(r23) == Length(9));
  CHECK(square_area_cost(Rect{0, 0, 2, 2}) == Length(4));
  int n = 7;
  CHECK(area_cost(Rect{0, 0, n * n, 2}) == Length(2 * n * n));
}

TEST_CASE("interior disjointness") {
  std::vector<Piece> two{Piece{1, 1}, Piece{1, 1}};
  CHECK(interiors_disjoint(two, std::vector<Placement>{at(0, 0, 0), at(1, 1, 0)}));
  CHECK_FALSE(interiors_disjoint(
      two, std::vector<Placement>{at(0, 0, 0), at(1, Length::ratio(1, 2), Length::ratio(1, 2))}));

  // Symmetric and translation invariant.
  std::vector<Rect> a{Rect{0, 0, 2, 1}, Rect{1, 0, 3, 1}};
  std::vector<Rect> b{a[1], a[0]};
  CHECK(interiors_disjoint(a) == interiors_disjoint(b));
  Length dx = Length::sqrt2_pow(3), dy = Length::ratio(-5, 7);
  for (auto* rs : {&a, &b}) {
    for (auto& r : *rs) r = Rect{r.x_min + dx, r.y_min + dy, r.x_max + dx, r.y_max + dy};
  }
  CHECK_FALSE(interiors_disjoint(a));
  CHECK_FALSE(interiors_disjoint(b));
}

TEST_CASE("piece validation and rotation") {
  CHECK_THROWS_AS(Piece::make(0, 1), ParseError);
  CHECK_THROWS_AS(Piece::make(1, -3), ParseError);
  Piece p = Piece::make(2, 3);
  Placement pl{0, 1, 1, true};
  CHECK(placed_rect(p, pl) == Rect{1, 1, 4, 3});
  CHECK(p.long_side() == Length(3));
  CHECK(p.short_side() == Length(2));
}
