#pragma once

// Disc-membership counting over rows of grid points: the inner loop of every
// overlap and coverage sweep. A scalar reference and an AVX2 variant share one
// contract and must produce identical counts; the dispatcher picks the widest
// variant the running CPU supports.

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace fockspace::simd {

/// Structure-of-arrays disc set. Membership is strict: (x-cx)^2 + (y-cy)^2 < r2.
struct DiscSet {
  std::vector<double> cx;
  std::vector<double> cy;
  std::vector<double> r2;

  std::size_t size() const noexcept { return cx.size(); }
  void push_back(double x, double y, double radius_squared) {
    cx.push_back(x);
    cy.push_back(y);
    r2.push_back(radius_squared);
  }
};

enum class Backend { scalar, avx2 };

std::string_view backend_name(Backend b) noexcept;

/// Widest backend compiled in and supported by the CPU.
Backend detect_backend() noexcept;

/// Backends that can run here, scalar first.
std::vector<Backend> available_backends();

/// counts[i] += number of discs containing (xs[i], y). Discs whose band
/// |y - cy| cannot reach the row should be filtered by the caller for speed;
/// the result does not depend on it.
void accumulate_row_counts(std::span<const double> xs, double y, const DiscSet& discs,
                           std::span<std::int32_t> counts);
void accumulate_row_counts(Backend backend, std::span<const double> xs, double y,
                           const DiscSet& discs, std::span<std::int32_t> counts);

namespace detail {
void accumulate_row_counts_scalar(std::span<const double> xs, double y, const DiscSet& discs,
                                  std::span<std::int32_t> counts);
#if defined(FOCKSPACE_HAVE_AVX2)
void accumulate_row_counts_avx2(std::span<const double> xs, double y, const DiscSet& discs,
                                std::span<std::int32_t> counts);
#endif
}  // namespace detail

}  // namespace fockspace::simd
