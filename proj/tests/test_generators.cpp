#include <algorithm>
#include <set>

#include "doctest.h"
#include "ot/classical.hpp"
#include "ot/generators.hpp"
#include "ot/order_type.hpp"

using namespace ot;

TEST_CASE("moment curve points are verified and fully homogeneous") {
  for (std::size_t d = 1; d <= 5; ++d) {
    PointSequence m = gen_moment(d, 12);
    CHECK(m.dim == d);
    CHECK(m.size() == 12);
    CHECK(m.status.state == GpState::Verified);
  }
  for (std::size_t d : {1u, 2u, 3u, 4u}) {
    PointSequence m = gen_moment(d, d + 5);
    std::vector<std::size_t> all(m.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    auto rep = is_homogeneous(m, all);
    CHECK(rep.homogeneous);
    CHECK(rep.sign == Sign::Positive);
  }
}

TEST_CASE("moment curve honors start and step") {
  PointSequence m = gen_moment(2, 3, Rational(1, 2), Rational(2));
  CHECK(m[0].coords[0] == Rational(1, 2));
  CHECK(m[0].coords[1] == Rational(1, 4));
  CHECK(m[1].coords[0] == Rational(5, 2));
  CHECK(m[2].coords[0] == Rational(9, 2));
}

TEST_CASE("monotone-free block sequence") {
  std::vector<Rational> s = gen_es_monotone(3);
  REQUIRE(s.size() == 4);
  CHECK(s == std::vector<Rational>{Rational(3), Rational(4), Rational(1),
                                   Rational(2)});

  for (std::size_t n = 3; n <= 8; ++n) {
    std::vector<Rational> v = gen_es_monotone(n);
    CHECK(v.size() == (n - 1) * (n - 1));
    // distinct values
    std::set<Rational> uniq(v.begin(), v.end());
    CHECK(uniq.size() == v.size());
    // DP certificate: longest monotone run is exactly n-1
    CHECK(monotone_extract(v, 0).size() == n - 1);
  }
}

TEST_CASE("cup/cap-free sequence sizes and certificates") {
  CHECK(gen_es_capcup(3).size() == 2);
  CHECK(gen_es_capcup(4).size() == 6);
  CHECK(gen_es_capcup(5).size() == 20);
  CHECK(gen_es_capcup(6).size() == 70);

  for (std::size_t n = 4; n <= 6; ++n) {
    PointSequence p = gen_es_capcup(n);
    CHECK(p.status.state != GpState::Degenerate);
    // x-increasing
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
      CHECK(p[i].coords[0] < p[i + 1].coords[0]);
    CHECK(cupcap_extract(p, 0).size() == n - 1);
  }
}

TEST_CASE("random generation is deterministic in the seed") {
  PointSequence a = gen_random(3, 15, 99, Integer(100000));
  PointSequence b = gen_random(3, 15, 99, Integer(100000));
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    CHECK(a[i].coords == b[i].coords);

  PointSequence c = gen_random(3, 15, 100, Integer(100000));
  bool same = true;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].coords != c[i].coords) same = false;
  CHECK_FALSE(same);
}

TEST_CASE("random coordinates stay in the box with distinct axes") {
  PointSequence p = gen_random(2, 25, 7, Integer(50));
  for (std::size_t axis = 0; axis < 2; ++axis) {
    std::set<Rational> seen;
    for (const Point& q : p.points) {
      CHECK(q.coords[axis] >= Rational(-50));
      CHECK(q.coords[axis] <= Rational(50));
      CHECK(seen.insert(q.coords[axis]).second);
    }
  }
  CHECK(p.status.state == GpState::Verified);  // 25 <= exhaustive cap
}

TEST_CASE("a too-tight box exhausts the retries") {
  try {
    gen_random(2, 10, 1, Integer(3));
    FAIL("expected RetriesExhausted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RetriesExhausted);
  }
}
