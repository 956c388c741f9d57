#pragma once

#include <cstddef>
#include <vector>

namespace hvss::kernels {

/// Function table for the data-parallel inner loops shared by the geometry
/// and hypervolume code. Every operation here is value-exact (componentwise
/// max and <= tests involve no rounding), so all implementations produce
/// bit-identical results and the dispatch choice never changes numeric
/// output, only speed.
struct Ops {
  const char* name;

  /// dst[i*d + j] = max(src[i*d + j], bound[j]). dst may alias src.
  /// Equal values resolve to bound[j] (relevant only for signed zeros).
  void (*worse_rows)(double* dst, const double* src, std::size_t n,
                     std::size_t d, const double* bound);

  /// True iff a[j] <= b[j] for all j in [0, d).
  bool (*leq_all)(const double* a, const double* b, std::size_t d);

  /// Smallest i in [0, n) with i != skip and rows[i] <= q componentwise;
  /// returns n when no such row exists. Pass skip >= n to scan every row.
  std::size_t (*find_dominator)(const double* rows, std::size_t n,
                                std::size_t d, const double* q,
                                std::size_t skip);
};

enum class Isa { Scalar, Avx2, Neon };

const char* isa_name(Isa isa);

/// Table currently in use. Resolved once on first call: the best table the
/// CPU supports, overridable through the HVSS_KERNELS environment variable
/// ("scalar", "avx2", "neon").
const Ops& active();
Isa active_isa();

/// Forces a table at runtime (tests, benchmark pinning). Returns false and
/// leaves the dispatch untouched when the ISA is unavailable.
bool set_active(Isa isa);

/// ISAs usable on this machine with this binary.
std::vector<Isa> available();

/// Table for a specific ISA; throws std::invalid_argument if unavailable.
const Ops& table(Isa isa);

}  // namespace hvss::kernels
