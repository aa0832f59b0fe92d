#include <cassert>

#include "fockspace/simd/disc_sweep.hpp"

namespace fockspace::simd::detail {

void accumulate_row_counts_scalar(std::span<const double> xs, double y, const DiscSet& discs,
                                  std::span<std::int32_t> counts) {
  assert(counts.size() == xs.size());
  for (std::size_t d = 0; d < discs.size(); ++d) {
    const double dy = y - discs.cy[d];
    const double dy2 = dy * dy;
    const double cx = discs.cx[d];
    const double r2 = discs.r2[d];
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const double dx = xs[i] - cx;
      const double d2 = dx * dx + dy2;
      counts[i] += d2 < r2 ? 1 : 0;
    }
  }
}

}  // namespace fockspace::simd::detail
