#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstring>
#include <numbers>
#include <vector>

#include "hvss/fronts.hpp"
#include "hvss/kernels.hpp"

using namespace hvss;

namespace {

bool mutually_nondominated(const Front& f) {
  const kernels::Ops& ops = kernels::active();
  const double* rows = f.view().data;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (ops.find_dominator(rows, f.size(), f.dim(), rows + i * f.dim(), i) !=
        f.size()) {
      return false;
    }
  }
  return true;
}

double surface_residual(std::span<const double> p) {
  const std::size_t d = p.size();
  double expect = static_cast<double>(d);
  for (std::size_t j = 0; j + 1 < d; ++j) {
    expect -= p[j] * (1.0 + std::sin(3.0 * std::numbers::pi * p[j]));
  }
  return std::abs(p[d - 1] - expect);
}

}  // namespace

TEST_CASE("spherical front lies on the unit sphere patch") {
  FrontSpec spec{FrontShape::Spherical, 4, 500, 7};
  const Front f = gen_spherical(spec);
  REQUIRE(f.size() == 500);
  for (std::size_t i = 0; i < f.size(); ++i) {
    double sq = 0.0;
    for (double v : f.row(i)) {
      CHECK(v >= 0.0);
      CHECK(v <= 1.0);
      sq += v * v;
    }
    CHECK(std::abs(sq - 1.0) <= 1e-9);
  }
  CHECK(mutually_nondominated(f));
}

TEST_CASE("inverted spherical front") {
  FrontSpec spec{FrontShape::InvertedSpherical, 3, 400, 8};
  const Front f = gen_inverted_spherical(spec);
  REQUIRE(f.size() == 400);
  for (std::size_t i = 0; i < f.size(); ++i) {
    double sq = 0.0;
    bool all_zero = true;
    for (double v : f.row(i)) {
      CHECK(v >= 0.0);
      CHECK(v <= 1.0);
      if (v != 0.0) all_zero = false;
      sq += (1.0 - v) * (1.0 - v);
    }
    CHECK(std::abs(sq - 1.0) <= 1e-9);
    CHECK_FALSE(all_zero);
  }
  CHECK(mutually_nondominated(f));
}

TEST_CASE("discontinuous front lies on its surface and is an antichain") {
  for (std::size_t d : {std::size_t{2}, std::size_t{3}, std::size_t{5}}) {
    FrontSpec spec{FrontShape::Discontinuous, d, 300, 9};
    const Front f = gen_discontinuous(spec);
    REQUIRE(f.size() == 300);
    for (std::size_t i = 0; i < f.size(); ++i) {
      CHECK(surface_residual(f.row(i)) <= 1e-9);
    }
    CHECK(mutually_nondominated(f));
  }
}

TEST_CASE("discontinuous front splits into disconnected pieces in 2-d") {
  FrontSpec spec{FrontShape::Discontinuous, 2, 600, 10};
  const Front f = gen_discontinuous(spec);
  std::vector<double> xs;
  xs.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) xs.push_back(f.row(i)[0]);
  std::sort(xs.begin(), xs.end());
  std::size_t components = 1;
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (xs[i] - xs[i - 1] > 0.05) ++components;
  }
  CHECK(components >= 2);
}

TEST_CASE("generators are deterministic per seed") {
  for (FrontShape shape : {FrontShape::Spherical, FrontShape::InvertedSpherical,
                           FrontShape::Discontinuous}) {
    FrontSpec spec{shape, 3, 120, 1234};
    const Front a = generate_front(spec);
    const Front b = generate_front(spec);
    REQUIRE(a.size() == b.size());
    CHECK(std::memcmp(a.view().data, b.view().data,
                      a.size() * a.dim() * sizeof(double)) == 0);

    spec.seed = 4321;
    const Front c = generate_front(spec);
    CHECK(std::memcmp(a.view().data, c.view().data,
                      a.size() * a.dim() * sizeof(double)) != 0);
  }
}

TEST_CASE("normalization maps every objective onto [0, 1]") {
  FrontSpec spec{FrontShape::Discontinuous, 3, 250, 11};
  const Front raw = gen_discontinuous(spec);
  const Front norm = normalize_unit_box(raw);
  REQUIRE(norm.size() == raw.size());

  for (std::size_t j = 0; j < norm.dim(); ++j) {
    double lo = 1e300, hi = -1e300;
    for (std::size_t i = 0; i < norm.size(); ++i) {
      lo = std::min(lo, norm.row(i)[j]);
      hi = std::max(hi, norm.row(i)[j]);
    }
    CHECK(lo == 0.0);
    CHECK(hi == 1.0);
  }

  // Dominance relations survive the affine map.
  for (std::size_t i = 0; i < 40; ++i) {
    for (std::size_t k2 = 0; k2 < 40; ++k2) {
      CHECK(weakly_dominates(raw.row(i), raw.row(k2)) ==
            weakly_dominates(norm.row(i), norm.row(k2)));
    }
  }
  CHECK(mutually_nondominated(norm));
}

TEST_CASE("normalization rejects degenerate inputs") {
  FrontSpec spec{FrontShape::Spherical, 2, 1, 3};
  const Front single = gen_spherical(spec);
  CHECK_THROWS_AS(normalize_unit_box(single), std::invalid_argument);
}

TEST_CASE("subsample") {
  FrontSpec spec{FrontShape::Spherical, 3, 200, 5};
  const Front pool = gen_spherical(spec);

  const Front a = subsample(pool, 50, 77);
  const Front b = subsample(pool, 50, 77);
  REQUIRE(a.size() == 50);
  CHECK(std::memcmp(a.view().data, b.view().data,
                    a.size() * a.dim() * sizeof(double)) == 0);

  const Front c = subsample(pool, 50, 78);
  CHECK(std::memcmp(a.view().data, c.view().data,
                    a.size() * a.dim() * sizeof(double)) != 0);

  // Full-size sample is a permutation of the pool.
  const Front full = subsample(pool, 200, 9);
  REQUIRE(full.size() == 200);
  auto key = [&](const Front& f, std::size_t i) {
    return std::vector<double>(f.row(i).begin(), f.row(i).end());
  };
  std::vector<std::vector<double>> xs, ys;
  for (std::size_t i = 0; i < 200; ++i) {
    xs.push_back(key(pool, i));
    ys.push_back(key(full, i));
  }
  std::sort(xs.begin(), xs.end());
  std::sort(ys.begin(), ys.end());
  CHECK(xs == ys);

  CHECK_THROWS_AS(subsample(pool, 201, 1), std::invalid_argument);
}

TEST_CASE("generated points stay strictly below the experiment reference") {
  for (FrontShape shape : {FrontShape::Spherical, FrontShape::InvertedSpherical,
                           FrontShape::Discontinuous}) {
    FrontSpec spec{shape, 4, 300, 21};
    Front f = generate_front(spec);
    if (shape == FrontShape::Discontinuous) f = normalize_unit_box(f);
    for (std::size_t i = 0; i < f.size(); ++i) {
      for (double v : f.row(i)) CHECK(v < 1.1);
    }
  }
}
