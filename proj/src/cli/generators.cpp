#include "fockspace/cli/generators.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fockspace::cli {

namespace {

// Smallest m with sqrt(m/alpha) - c >= cover.
int multiplicity_for_cover(double alpha, double cover, double c) {
  const double needed = alpha * (cover + c) * (cover + c);
  int m = std::max(1, static_cast<int>(std::ceil(needed)));
  while (std::sqrt(m / alpha) - c < cover) ++m;
  return m;
}

void add_ring(std::vector<DivisorEntry>& entries, double radius, int count, int multiplicity) {
  for (int t = 0; t < count; ++t) {
    const double angle = 2.0 * std::numbers::pi * t / count;
    entries.push_back({std::polar(radius, angle), multiplicity});
  }
}

}  // namespace

GeneratedDivisor generate_lattice(FockParams params, double spacing, int multiplicity, double window) {
  if (!(spacing > 0.0)) throw std::invalid_argument("lattice spacing must be positive");
  if (multiplicity < 1) throw std::invalid_argument("multiplicity must be at least 1");
  if (!(window > 0.0)) throw std::invalid_argument("window radius must be positive");
  const long n = static_cast<long>(std::floor(window / spacing + 1e-9));
  const double limit2 = (window / spacing) * (window / spacing) * (1.0 + 1e-12);
  std::vector<DivisorEntry> entries;
  for (long j = -n; j <= n; ++j) {
    for (long i = -n; i <= n; ++i) {
      if (static_cast<double>(i * i + j * j) > limit2) continue;
      entries.push_back({Complex(i * spacing, j * spacing), multiplicity});
    }
  }
  return {Divisor(params, std::move(entries)), "lattice", {}, "distinct points, multiplicity >= 1"};
}

GeneratedDivisor generate_covering_rings(FockParams params, double c, double window, double growth) {
  if (!(c > 0.0)) throw std::invalid_argument("C must be positive");
  if (!(window > 0.0)) throw std::invalid_argument("window radius must be positive");
  if (growth < 0.0) throw std::invalid_argument("growth must be nonnegative");
  const double alpha = params.alpha();
  const double base = 1.0 / std::sqrt(alpha);
  auto cover_at = [&](double rho) { return base + growth * rho; };

  std::vector<DivisorEntry> entries;
  std::vector<RingSchedule> rings;

  const int m0 = multiplicity_for_cover(alpha, base, c);
  const double r0 = std::sqrt(m0 / alpha) - c;
  entries.push_back({Complex{}, m0});
  rings.push_back({0.0, 1, m0, r0});

  // Every radius below `reach` is covered so far.
  double reach = r0;
  while (reach < window) {
    // Place the ring half a covering radius past the covered region; its inner
    // band edge then lies at least 0.36 covering radii inside it.
    const double rho = reach + 0.5 * cover_at(reach);
    const int m = multiplicity_for_cover(alpha, cover_at(rho), c);
    const double r = std::sqrt(m / alpha) - c;
    const int count = std::max(1, static_cast<int>(std::ceil(2.0 * std::numbers::pi * rho / r)));
    // Worst point at radius s is angularly midway between two neighbours:
    // covered iff s^2 - 2 s rho cos(h) + rho^2 < r^2, h = pi / count.
    const double h = std::numbers::pi / count;
    const double half_chord = rho * std::sin(h);
    const double spread = std::sqrt(r * r - half_chord * half_chord);
    const double inner_edge = rho * std::cos(h) - spread;
    if (!(inner_edge < reach)) throw std::logic_error("covering ring schedule left a gap");
    add_ring(entries, rho, count, m);
    rings.push_back({rho, count, m, r});
    reach = rho * std::cos(h) + spread;
  }

  GeneratedDivisor out{Divisor(params, std::move(entries)), "covering-rings", std::move(rings),
                       "discs D(lambda, sqrt(m/alpha) - C) cover |z| <= window"};
  const Window check(window, window / 100.0);
  if (!coverage_defect(out.divisor, c, DiscSign::minus, check, 0.0).empty()) {
    throw std::logic_error("covering-rings output violates its covering contract");
  }
  return out;
}

GeneratedDivisor generate_disjoint_rings(FockParams params, double c, double window, int mult_step) {
  if (!(c > 0.0)) throw std::invalid_argument("C must be positive");
  if (!(window > 0.0)) throw std::invalid_argument("window radius must be positive");
  if (mult_step < 1) throw std::invalid_argument("multiplicity step must be at least 1");
  const double alpha = params.alpha();
  constexpr double kSlack = 1.0 + 1e-9;

  std::vector<DivisorEntry> entries{{Complex{}, 1}};
  std::vector<RingSchedule> rings{{0.0, 1, 1, std::sqrt(1.0 / alpha) + c}};
  double rho = 0.0;
  double previous = rings.front().disc_radius;
  for (int n = 1;; ++n) {
    const int m = 1 + n * mult_step;
    const double s = std::sqrt(m / alpha) + c;
    rho = (rho + previous + s) * kSlack;
    if (rho > window) break;
    // Neighbours on the ring are a chord 2 rho sin(pi/count) apart; need >= 2 s.
    const double ratio = std::min(1.0, s * kSlack / rho);
    const int count = std::max(1, static_cast<int>(std::floor(std::numbers::pi / std::asin(ratio))));
    add_ring(entries, rho, count, m);
    rings.push_back({rho, count, m, s});
    previous = s;
  }

  GeneratedDivisor out{Divisor(params, std::move(entries)), "disjoint-rings", std::move(rings),
                       "discs D(lambda, sqrt(m/alpha) + C) pairwise disjoint"};
  if (!pairwise_disjoint(out.divisor, c, DiscSign::plus).disjoint) {
    throw std::logic_error("disjoint-rings output violates its disjointness contract");
  }
  return out;
}

}  // namespace fockspace::cli
