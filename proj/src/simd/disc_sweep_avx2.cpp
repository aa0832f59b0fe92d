// Compiled with -mavx2 only; reached through the dispatcher after a CPU check.

#include <immintrin.h>

#include <cassert>

#include "fockspace/simd/disc_sweep.hpp"

namespace fockspace::simd::detail {

void accumulate_row_counts_avx2(std::span<const double> xs, double y, const DiscSet& discs,
                                std::span<std::int32_t> counts) {
  assert(counts.size() == xs.size());
  const std::size_t n = xs.size();
  const std::size_t body = n - n % 4;
  const __m256d one = _mm256_set1_pd(1.0);

  for (std::size_t i = 0; i < body; i += 4) {
    const __m256d x = _mm256_loadu_pd(xs.data() + i);
    __m256d hits = _mm256_setzero_pd();
    for (std::size_t d = 0; d < discs.size(); ++d) {
      const double dy = y - discs.cy[d];
      const __m256d dy2 = _mm256_set1_pd(dy * dy);
      const __m256d dx = _mm256_sub_pd(x, _mm256_set1_pd(discs.cx[d]));
      // mul then add, matching the scalar rounding sequence exactly
      const __m256d d2 = _mm256_add_pd(_mm256_mul_pd(dx, dx), dy2);
      const __m256d inside = _mm256_cmp_pd(d2, _mm256_set1_pd(discs.r2[d]), _CMP_LT_OQ);
      hits = _mm256_add_pd(hits, _mm256_and_pd(inside, one));
    }
    const __m128i h = _mm256_cvtpd_epi32(hits);
    const __m128i c = _mm_loadu_si128(reinterpret_cast<const __m128i*>(counts.data() + i));
    _mm_storeu_si128(reinterpret_cast<__m128i*>(counts.data() + i), _mm_add_epi32(c, h));
  }

  if (body < n) {
    accumulate_row_counts_scalar(xs.subspan(body), y, discs, counts.subspan(body));
  }
}

}  // namespace fockspace::simd::detail
