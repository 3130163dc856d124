#include <random>
#include <set>

#include "doctest.h"
#include "ot/arrangement.hpp"

using namespace ot;

namespace {

Hyperplane plane(std::initializer_list<long> coeffs) {
  std::vector<Rational> c;
  for (long v : coeffs) c.emplace_back(v);
  return Hyperplane::make(std::move(c));
}

Point pt(std::initializer_list<long> coords) {
  Point p;
  for (long v : coords) p.coords.emplace_back(v);
  return p;
}

}  // namespace

TEST_CASE("hyperplane canonical form and evaluation") {
  Hyperplane h = plane({2, 4, 6});  // 2x + 4y + 6 -> x + 2y + 3
  CHECK(h.coeffs[0] == Rational(1));
  CHECK(h.coeffs[1] == Rational(2));
  CHECK(h.coeffs[2] == Rational(3));
  CHECK(h.evaluate(pt({1, 1})) == Rational(6));

  CHECK_THROWS_AS(Hyperplane::make({Rational(0), Rational(5)}), Error);
}

TEST_CASE("classify base cases") {
  Hyperplane h = plane({1, 0, 0});  // x = 0
  auto vecs = classify({pt({1, 1}), pt({-1, 2})}, {h});
  CHECK(vecs[0] == SignVector{Sign::Positive});
  CHECK(vecs[1] == SignVector{Sign::Negative});

  // zero planes: everything in one (empty-vector) class
  vecs = classify({pt({1, 1}), pt({2, 2})}, {});
  CHECK(vecs[0].empty());
  CHECK(vecs[1].empty());

  CHECK_THROWS_AS(classify({pt({0, 5})}, {h}), Error);
}

TEST_CASE("classify is invariant under positive rescaling") {
  Hyperplane a = plane({1, 2, -3});
  Hyperplane b = plane({5, 10, -15});
  std::mt19937_64 rng(9);
  for (int i = 0; i < 50; ++i) {
    Point p = pt({static_cast<long>(rng() % 201) - 100,
                  static_cast<long>(rng() % 201) - 100});
    if (sgn(a.evaluate(p)) == 0) continue;
    CHECK(classify({p}, {a}) == classify({p}, {b}));
  }
}

TEST_CASE("simple cell count formula") {
  CHECK(simple_cell_count(3, 2) == 7);
  CHECK(simple_cell_count(0, 2) == 1);
  CHECK(simple_cell_count(0, 5) == 1);
  CHECK(simple_cell_count(5, 3) == 26);
  CHECK(simple_cell_count(5, 3) <= Integer(5 * 5 * 5));
}

TEST_CASE("cell count bound m^d holds for m >= d >= 2") {
  for (unsigned long d = 2; d <= 8; ++d)
    for (unsigned long m = d; m <= 100; ++m) {
      Integer md;
      mpz_ui_pow_ui(md.get_mpz_t(), m, d);
      CHECK(simple_cell_count(m, d) <= md);
    }
}

TEST_CASE("sampled sign vectors never exceed the cell count") {
  std::mt19937_64 rng(31);
  std::vector<Hyperplane> planes = {plane({1, 0, 0}), plane({0, 1, 0}),
                                    plane({1, 1, -50})};
  std::set<SignVector> seen;
  for (int i = 0; i < 4000; ++i) {
    Point p = pt({static_cast<long>(rng() % 401) - 200,
                  static_cast<long>(rng() % 401) - 200});
    bool on_plane = false;
    for (const auto& h : planes)
      if (sgn(h.evaluate(p)) == 0) on_plane = true;
    if (on_plane) continue;
    seen.insert(classify({p}, planes)[0]);
  }
  CHECK(seen.size() <= 7);
  CHECK(Integer(static_cast<unsigned long>(seen.size())) <=
        simple_cell_count(3, 2));
}
