#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "hvss/core.hpp"

namespace hvss {

enum class FrontShape { Spherical, InvertedSpherical, Discontinuous };

/// Identifiers used by the CLI and metadata files: "spherical",
/// "inverted_spherical", "discontinuous".
const char* shape_id(FrontShape shape);
std::optional<FrontShape> shape_from_id(std::string_view id);

struct FrontSpec {
  FrontShape shape = FrontShape::Spherical;
  std::size_t dim = 3;
  std::size_t count = 1;
  std::uint64_t seed = 0;
};

/// Points uniform on the nonnegative unit-sphere patch (sum of squares 1):
/// absolute values of d standard normals, scaled to unit Euclidean norm.
/// Mutually nondominated by construction; bitwise reproducible per seed.
Front gen_spherical(const FrontSpec& spec);

/// The spherical patch reflected through the all-ones point: p = 1 - s
/// componentwise, so sum_j (1 - p_j)^2 = 1.
Front gen_inverted_spherical(const FrontSpec& spec);

/// Points on the disconnected benchmark surface
///   f_d = d - sum_{j<d} f_j (1 + sin(3 pi f_j)),  f_1..f_{d-1} ~ U[0,1],
/// kept only while mutually nondominated. Samples arrive in rounds; the
/// earliest `count` survivors are returned. Throws when the round budget
/// runs out before enough points survive.
Front gen_discontinuous(const FrontSpec& spec);

Front generate_front(const FrontSpec& spec);

/// Affine min-max rescaling of every objective into [0, 1]. Preserves all
/// dominance relations. Requires at least two points and no constant
/// objective.
Front normalize_unit_box(const Front& front);

/// Uniform m-subset without replacement, deterministic per seed.
Front subsample(const Front& front, std::size_t m, std::uint64_t seed);

}  // namespace hvss
