#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "hvss/core.hpp"
#include "hvss/rng.hpp"
#include "support.hpp"

using namespace hvss;

TEST_CASE("weak dominance on points") {
  CHECK(weakly_dominates(Point{1, 3}, Point{2, 3}));
  CHECK(weakly_dominates(Point{1, 3}, Point{1, 3}));  // reflexive
  CHECK_FALSE(weakly_dominates(Point{1, 3}, Point{3, 1}));
  CHECK_FALSE(weakly_dominates(Point{3, 1}, Point{1, 3}));
  CHECK_THROWS_AS(weakly_dominates(Point{1, 2}, Point{1, 2, 3}),
                  std::invalid_argument);
}

TEST_CASE("point validation") {
  CHECK_THROWS_AS(Point({1.0}), std::invalid_argument);  // d >= 2
  CHECK_THROWS_AS(Point({1.0, std::numeric_limits<double>::infinity()}),
                  std::invalid_argument);
  CHECK_THROWS_AS(Point({std::nan(""), 0.0}), std::invalid_argument);
}

TEST_CASE("worse is the componentwise maximum") {
  CHECK(worse(Point{1, 3}, Point{2, 2}) == Point{2, 3});
  CHECK(worse(Point{3, 1}, Point{2, 2}) == Point{3, 2});
  const Point p{0.25, 0.5, 0.75};
  CHECK(worse(p, p) == p);
  CHECK_THROWS_AS(worse(Point{1, 2}, Point{1, 2, 3}), std::invalid_argument);
}

TEST_CASE("worse is a lattice join: commutative, associative, idempotent") {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = 2 + rng.below(5);
    const Point a = testing::random_point(rng, d);
    const Point b = testing::random_point(rng, d);
    const Point c = testing::random_point(rng, d);
    CHECK(worse(a, b) == worse(b, a));
    CHECK(worse(worse(a, b), c) == worse(a, worse(b, c)));
    CHECK(worse(a, a) == a);
  }
}

TEST_CASE("limit examples") {
  const Front s = Front::checked({Point{1, 3}, Point{3, 1}});
  const Front out = limit(s, Point{2, 2});
  REQUIRE(out.size() == 2);
  CHECK(out.point(0) == Point{2, 3});
  CHECK(out.point(1) == Point{3, 2});

  // The image of (1,4) is (2.5,4), dominated by the image (2.5,3).
  const Front s2 = Front::checked({Point{1, 4}, Point{2, 3}});
  const Front out2 = limit(s2, Point{2.5, 0.5});
  REQUIRE(out2.size() == 1);
  CHECK(out2.point(0) == Point{2.5, 3});

  CHECK(limit(Front(), Point{1, 2}).empty());
}

TEST_CASE("limit members sit above the clip point and form an antichain") {
  Rng rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t d = 2 + rng.below(4);
    const Front s = testing::random_box_front(rng, d, 12);
    const Point p = testing::random_point(rng, d);
    const Front out = limit(s, p);
    for (std::size_t i = 0; i < out.size(); ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        CHECK(out.row(i)[j] >= p[j]);
      }
      for (std::size_t k2 = 0; k2 < out.size(); ++k2) {
        if (i == k2) continue;
        CHECK_FALSE(weakly_dominates(out.row(k2), out.row(i)));
      }
    }
  }
}

TEST_CASE("nondominated filter") {
  const Front f = nondominated_filter(
      std::vector<Point>{Point{1, 3}, Point{2, 2}, Point{2, 4}});
  REQUIRE(f.size() == 2);
  CHECK(f.point(0) == Point{1, 3});
  CHECK(f.point(1) == Point{2, 2});

  CHECK(nondominated_filter(std::vector<Point>{Point{1, 1}}).size() == 1);

  const Front dup =
      nondominated_filter(std::vector<Point>{Point{1, 2}, Point{1, 2}});
  REQUIRE(dup.size() == 1);
  CHECK(dup.point(0) == Point{1, 2});
}

TEST_CASE("nondominated filter is idempotent") {
  Rng rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t d = 2 + rng.below(5);
    const Front once = testing::random_box_front(rng, d, 40);
    const Front twice = nondominated_filter(once.view());
    REQUIRE(twice.size() == once.size());
    for (std::size_t i = 0; i < once.size(); ++i) {
      CHECK(once.point(i) == twice.point(i));
    }
  }
}

TEST_CASE("front construction rejects dominated rows and duplicates") {
  CHECK_THROWS_AS(Front::checked({Point{1, 1}, Point{2, 2}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(Front::checked({Point{1, 2}, Point{1, 2}}),
                  std::invalid_argument);
  CHECK_NOTHROW(Front::checked({Point{1, 3}, Point{2, 2}, Point{3, 1}}));
}
