#include <random>

#include "doctest.h"
#include "ot/generators.hpp"
#include "ot/orientation.hpp"

using namespace ot;

namespace {

PointSequence make_seq(std::size_t dim,
                       std::vector<std::vector<long>> coords) {
  PointSequence seq;
  seq.dim = dim;
  for (auto& c : coords) {
    Point p;
    for (long v : c) p.coords.emplace_back(v);
    seq.points.push_back(std::move(p));
  }
  return seq;
}

}  // namespace

TEST_CASE("rational parsing and formatting round-trips") {
  CHECK(parse_rational("3/6") == parse_rational("1/2"));
  CHECK(to_string(parse_rational("3/6")) == "1/2");
  CHECK(to_string(parse_rational("-4/2")) == "-2");
  CHECK(to_string(parse_rational("7")) == "7");
  // denominator stays positive
  CHECK(to_string(parse_rational("1/-2")) == "-1/2");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
}

TEST_CASE("rational comparison agrees with cross multiplication") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    long an = static_cast<long>(rng() % 2001) - 1000;
    long ad = static_cast<long>(rng() % 999) + 1;
    long bn = static_cast<long>(rng() % 2001) - 1000;
    long bd = static_cast<long>(rng() % 999) + 1;
    Rational a = make_rational(an, ad), b = make_rational(bn, bd);
    CHECK((a < b) == (Integer(an) * bd < Integer(bn) * ad));
  }
}

TEST_CASE("orientation base cases") {
  PointSequence t = make_seq(2, {{0, 0}, {1, 0}, {0, 1}});
  CHECK(orientation(t.points, 2) == Sign::Positive);

  PointSequence c = make_seq(2, {{0, 0}, {1, 1}, {2, 2}});
  CHECK(orientation(c.points, 2) == Sign::Zero);

  // d=3 moment-curve points: Vandermonde with increasing parameters
  PointSequence m = gen_moment(3, 4);
  CHECK(orientation(m.points, 3) == Sign::Positive);
}

TEST_CASE("orientation rejects bad input") {
  PointSequence t = make_seq(2, {{0, 0}, {1, 0}});
  CHECK_THROWS_AS(orientation(t.points, 2), Error);
  PointSequence bad = make_seq(2, {{0, 0}, {1, 0}, {0, 1}});
  bad.points[1].coords.push_back(Rational(5));
  CHECK_THROWS_AS(orientation(bad.points, 2), Error);
}

TEST_CASE("orientation is antisymmetric under adjacent swaps") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t d = 1 + rng() % 4;
    std::vector<Point> pts(d + 1);
    for (Point& p : pts)
      for (std::size_t j = 0; j < d; ++j)
        p.coords.emplace_back(static_cast<long>(rng() % 2001) - 1000);
    Sign base = orientation(pts, d);
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      auto swapped = pts;
      std::swap(swapped[i], swapped[i + 1]);
      CHECK(orientation(swapped, d) == flip(base));
    }
  }
}

TEST_CASE("orientation is invariant under common shifts") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t d = 1 + rng() % 3;
    std::vector<Point> pts(d + 1);
    for (Point& p : pts)
      for (std::size_t j = 0; j < d; ++j)
        p.coords.emplace_back(static_cast<long>(rng() % 201) - 100);
    std::vector<Rational> shift;
    for (std::size_t j = 0; j < d; ++j)
      shift.emplace_back(static_cast<long>(rng() % 201) - 100);
    auto shifted = pts;
    for (Point& p : shifted)
      for (std::size_t j = 0; j < d; ++j) p.coords[j] += shift[j];
    CHECK(orientation(shifted, d) == orientation(pts, d));
  }
}

TEST_CASE("bareiss determinant sign matches rational elimination") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 1 + rng() % 5;
    std::vector<std::vector<Integer>> mi(n, std::vector<Integer>(n));
    std::vector<std::vector<Rational>> mr(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        long v = static_cast<long>(rng() % 21) - 10;
        mi[i][j] = v;
        mr[i][j] = v;
      }
    CHECK(to_int(bareiss_det_sign(mi)) == sgn(rational_det(mr)));
  }
}

TEST_CASE("validate_general_position base cases") {
  PointSequence d1 = make_seq(1, {{3}, {1}, {2}});
  CHECK(validate_general_position(d1).state == GpState::Verified);

  PointSequence col = make_seq(2, {{0, 0}, {1, 1}, {2, 2}, {5, 0}});
  GpStatus st = validate_general_position(col);
  CHECK(st.state == GpState::Degenerate);
  CHECK(st.witness.kind == DegeneracyWitness::Kind::Hyperplane);
  CHECK(st.witness.indices == std::vector<std::size_t>{0, 1, 2});

  PointSequence shared = make_seq(2, {{0, 0}, {1, 5}, {1, 7}});
  st = validate_general_position(shared);
  CHECK(st.state == GpState::Degenerate);
  CHECK(st.witness.kind == DegeneracyWitness::Kind::SharedCoordinate);
  CHECK(st.witness.axis == 0);
  CHECK(st.witness.indices == std::vector<std::size_t>{1, 2});
}

TEST_CASE("validate goes lazy above the exhaustive cap") {
  PointSequence big = gen_random(2, 40, 5, Integer(1000000));
  CHECK(big.status.state == GpState::Unverified);
  PointSequence small = gen_random(2, 12, 5, Integer(1000000));
  CHECK(small.status.state == GpState::Verified);
}

TEST_CASE("positive_linear_transform preserves orientations") {
  PointSequence t = make_seq(2, {{0, 0}, {1, 0}, {0, 1}});
  t.status = validate_general_position(t);

  SUBCASE("identity is a no-op") {
    std::vector<std::vector<Rational>> id = {{Rational(1), Rational(0)},
                                             {Rational(0), Rational(1)}};
    Point zero{{Rational(0), Rational(0)}};
    PointSequence out = positive_linear_transform(t, id, zero);
    CHECK(out.points == t.points);
  }

  SUBCASE("shear keeps the triple positive") {
    std::vector<std::vector<Rational>> shear = {{Rational(1), Rational(1)},
                                                {Rational(0), Rational(1)}};
    Point zero{{Rational(0), Rational(0)}};
    PointSequence out = positive_linear_transform(t, shear, zero);
    CHECK(orientation(out.points, 2) == Sign::Positive);
  }

  SUBCASE("non-positive determinant is rejected") {
    std::vector<std::vector<Rational>> refl = {{Rational(-1), Rational(0)},
                                               {Rational(0), Rational(1)}};
    Point zero{{Rational(0), Rational(0)}};
    CHECK_THROWS_AS(positive_linear_transform(t, refl, zero), Error);
  }
}
