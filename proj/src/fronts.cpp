#include "hvss/fronts.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>
#include <numbers>
#include <string>
#include <unordered_set>

#include "hvss/kernels.hpp"
#include "hvss/rng.hpp"

namespace hvss {

const char* shape_id(FrontShape shape) {
  switch (shape) {
    case FrontShape::Spherical:
      return "spherical";
    case FrontShape::InvertedSpherical:
      return "inverted_spherical";
    case FrontShape::Discontinuous:
      return "discontinuous";
  }
  return "?";
}

std::optional<FrontShape> shape_from_id(std::string_view id) {
  if (id == "spherical") return FrontShape::Spherical;
  if (id == "inverted_spherical") return FrontShape::InvertedSpherical;
  if (id == "discontinuous") return FrontShape::Discontinuous;
  return std::nullopt;
}

namespace {

void require_spec(const FrontSpec& spec) {
  if (spec.dim < 2) {
    throw std::invalid_argument("front spec: dim must be at least 2");
  }
  if (spec.count < 1) {
    throw std::invalid_argument("front spec: count must be at least 1");
  }
}

// Byte-level row hashing for duplicate rejection (coordinates are finite
// and never signed-zero here, so value equality is byte equality).
struct RowHash {
  std::size_t operator()(const std::vector<double>& row) const {
    std::uint64_t h = 1469598103934665603ull;
    for (double v : row) {
      std::uint64_t bits;
      std::memcpy(&bits, &v, sizeof bits);
      for (int b = 0; b < 8; ++b) {
        h ^= (bits >> (8 * b)) & 0xffu;
        h *= 1099511628211ull;
      }
    }
    return static_cast<std::size_t>(h);
  }
};

Front sphere_like(const FrontSpec& spec, bool inverted) {
  require_spec(spec);
  const std::size_t d = spec.dim;
  Rng rng(spec.seed);
  std::vector<double> rows;
  rows.reserve(spec.count * d);
  std::unordered_set<std::vector<double>, RowHash> seen;
  std::vector<double> p(d);
  while (seen.size() < spec.count) {
    double norm_sq = 0.0;
    for (std::size_t j = 0; j < d; ++j) {
      p[j] = std::abs(rng.normal());
      norm_sq += p[j] * p[j];
    }
    if (norm_sq == 0.0) continue;
    const double inv = 1.0 / std::sqrt(norm_sq);
    for (std::size_t j = 0; j < d; ++j) {
      p[j] *= inv;
      if (inverted) p[j] = 1.0 - p[j];
    }
    if (!seen.insert(p).second) continue;  // duplicate draw, resample
    rows.insert(rows.end(), p.begin(), p.end());
  }
  return detail::make_front_unchecked(std::move(rows), d);
}

}  // namespace

Front gen_spherical(const FrontSpec& spec) { return sphere_like(spec, false); }

Front gen_inverted_spherical(const FrontSpec& spec) {
  return sphere_like(spec, true);
}

Front gen_discontinuous(const FrontSpec& spec) {
  require_spec(spec);
  const std::size_t d = spec.dim;
  const std::size_t batch =
      std::clamp<std::size_t>(4 * spec.count, 1024, 65536);
  constexpr std::size_t kMaxRounds = 64;

  Rng rng(spec.seed);
  const kernels::Ops& ops = kernels::active();

  // Survivor pool, kept mutually nondominated after every insertion and
  // ordered by sample serial number.
  std::vector<double> pool;
  std::vector<std::size_t> serials;
  std::size_t serial = 0;
  std::vector<double> p(d);

  std::size_t rounds = 0;
  for (; rounds < kMaxRounds; ++rounds) {
    for (std::size_t b = 0; b < batch; ++b, ++serial) {
      double trailing = static_cast<double>(d);
      for (std::size_t j = 0; j + 1 < d; ++j) {
        const double u = rng.uniform01();
        p[j] = u;
        trailing -= u * (1.0 + std::sin(3.0 * std::numbers::pi * u));
      }
      p[d - 1] = trailing;

      const std::size_t m = serials.size();
      if (ops.find_dominator(pool.data(), m, d, p.data(), m) != m) continue;
      std::size_t w = 0;
      for (std::size_t s = 0; s < m; ++s) {
        if (ops.leq_all(p.data(), pool.data() + s * d, d)) continue;
        if (w != s) {
          std::memmove(pool.data() + w * d, pool.data() + s * d,
                       d * sizeof(double));
          serials[w] = serials[s];
        }
        ++w;
      }
      pool.resize((w + 1) * d);
      serials.resize(w + 1);
      std::copy(p.begin(), p.end(), pool.begin() + w * d);
      serials[w] = serial;
    }
    if (serials.size() >= spec.count) break;
  }
  if (serials.size() < spec.count) {
    throw std::runtime_error(
        "discontinuous front: only " + std::to_string(serials.size()) +
        " of " + std::to_string(spec.count) + " points survived after " +
        std::to_string(rounds) + " rounds of " + std::to_string(batch) +
        " samples (dim " + std::to_string(d) + ")");
  }

  // Earliest `count` survivors by sample order.
  std::vector<std::size_t> order(serials.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return serials[a] < serials[b];
  });
  std::vector<double> rows(spec.count * d);
  for (std::size_t i = 0; i < spec.count; ++i) {
    std::memcpy(rows.data() + i * d, pool.data() + order[i] * d,
                d * sizeof(double));
  }
  return detail::make_front_unchecked(std::move(rows), d);
}

Front generate_front(const FrontSpec& spec) {
  switch (spec.shape) {
    case FrontShape::Spherical:
      return gen_spherical(spec);
    case FrontShape::InvertedSpherical:
      return gen_inverted_spherical(spec);
    case FrontShape::Discontinuous:
      return gen_discontinuous(spec);
  }
  throw std::invalid_argument("unknown front shape");
}

Front normalize_unit_box(const Front& front) {
  const std::size_t n = front.size();
  const std::size_t d = front.dim();
  if (n < 2) {
    throw std::invalid_argument("normalize: need at least 2 points");
  }
  const double* src = front.view().data;
  std::vector<double> lo(d, std::numeric_limits<double>::infinity());
  std::vector<double> hi(d, -std::numeric_limits<double>::infinity());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      lo[j] = std::min(lo[j], src[i * d + j]);
      hi[j] = std::max(hi[j], src[i * d + j]);
    }
  }
  for (std::size_t j = 0; j < d; ++j) {
    if (hi[j] == lo[j]) {
      throw std::invalid_argument("normalize: objective " + std::to_string(j) +
                                  " is constant");
    }
  }
  std::vector<double> rows(n * d);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      rows[i * d + j] = (src[i * d + j] - lo[j]) / (hi[j] - lo[j]);
    }
  }
  return detail::make_front_unchecked(std::move(rows), d);
}

Front subsample(const Front& front, std::size_t m, std::uint64_t seed) {
  const std::size_t n = front.size();
  if (m > n) {
    throw std::invalid_argument("subsample: m = " + std::to_string(m) +
                                " exceeds front size " + std::to_string(n));
  }
  const std::size_t d = front.dim();
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  Rng rng(seed);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t j = i + rng.below(n - i);
    std::swap(idx[i], idx[j]);
  }
  const double* src = front.view().data;
  std::vector<double> rows(m * d);
  for (std::size_t i = 0; i < m; ++i) {
    std::memcpy(rows.data() + i * d, src + idx[i] * d, d * sizeof(double));
  }
  return detail::make_front_unchecked(std::move(rows), d);
}

}  // namespace hvss
