#include "fockspace/simd/disc_sweep.hpp"

#include <stdexcept>

namespace fockspace::simd {

std::string_view backend_name(Backend b) noexcept {
  switch (b) {
    case Backend::scalar:
      return "scalar";
    case Backend::avx2:
      return "avx2";
  }
  return "unknown";
}

namespace {

bool cpu_has_avx2() noexcept {
#if defined(FOCKSPACE_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

}  // namespace

Backend detect_backend() noexcept {
  static const Backend cached = cpu_has_avx2() ? Backend::avx2 : Backend::scalar;
  return cached;
}

std::vector<Backend> available_backends() {
  std::vector<Backend> out{Backend::scalar};
  if (cpu_has_avx2()) out.push_back(Backend::avx2);
  return out;
}

void accumulate_row_counts(Backend backend, std::span<const double> xs, double y,
                           const DiscSet& discs, std::span<std::int32_t> counts) {
  if (counts.size() != xs.size()) throw std::invalid_argument("counts and abscissae differ in length");
  switch (backend) {
    case Backend::scalar:
      detail::accumulate_row_counts_scalar(xs, y, discs, counts);
      return;
    case Backend::avx2:
#if defined(FOCKSPACE_HAVE_AVX2)
      if (cpu_has_avx2()) {
        detail::accumulate_row_counts_avx2(xs, y, discs, counts);
        return;
      }
#endif
      throw std::runtime_error("avx2 backend not available on this machine");
  }
}

void accumulate_row_counts(std::span<const double> xs, double y, const DiscSet& discs,
                           std::span<std::int32_t> counts) {
  accumulate_row_counts(detect_backend(), xs, y, discs, counts);
}

}  // namespace fockspace::simd
