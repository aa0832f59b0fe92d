#include "fockspace/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <stdexcept>

#include "fockspace/simd/disc_sweep.hpp"

namespace fockspace {

Divisor::Divisor(FockParams params, std::vector<DivisorEntry> entries)
    : params_(params), entries_(std::move(entries)) {
  std::map<std::pair<double, double>, std::size_t> seen;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const DivisorEntry& e = entries_[i];
    if (e.multiplicity < 1) throw std::invalid_argument("multiplicity must be at least 1");
    if (!std::isfinite(e.point.real()) || !std::isfinite(e.point.imag())) {
      throw std::invalid_argument("divisor point must be finite");
    }
    if (!seen.emplace(std::make_pair(e.point.real(), e.point.imag()), i).second) {
      throw std::invalid_argument("divisor points must be pairwise distinct");
    }
  }
}

long Divisor::total_multiplicity() const noexcept {
  long total = 0;
  for (const DivisorEntry& e : entries_) total += e.multiplicity;
  return total;
}

Window::Window(double radius, double grid_step) : radius_(radius), grid_step_(grid_step) {
  if (!(radius > 0.0) || !std::isfinite(radius)) throw std::invalid_argument("window radius must be positive");
  if (!(grid_step > 0.0)) throw std::invalid_argument("grid step must be positive");
  if (grid_step > radius / 10.0 * (1.0 + 1e-12)) {
    throw std::invalid_argument("grid step must not exceed a tenth of the window radius");
  }
}

constexpr double kDegenerateRadius = 1e-12;

std::optional<double> disc_radius(const DivisorEntry& entry, const FockParams& params, double c,
                                  DiscSign sign) {
  const double base = std::sqrt(entry.multiplicity / params.alpha());
  if (sign == DiscSign::plus) return base + c;
  if (base - c > kDegenerateRadius * base) return base - c;
  return std::nullopt;
}

namespace {

simd::DiscSet collect_discs(const Divisor& divisor, double c, DiscSign sign) {
  simd::DiscSet discs;
  for (const DivisorEntry& e : divisor.entries()) {
    const auto r = disc_radius(e, divisor.params(), c, sign);
    if (!r || *r <= 0.0) continue;
    discs.push_back(e.point.real(), e.point.imag(), *r * *r);
  }
  return discs;
}

// Visits the window grid row by row. For each row the callback receives the
// ordinate, the abscissae inside the annulus and the per-point disc counts.
template <typename RowFn>
void sweep_window(const simd::DiscSet& discs, const Window& window, double hole_radius, RowFn&& on_row) {
  const double step = window.grid_step();
  const double outer = window.radius() / step;
  const double inner = hole_radius / step;
  const double outer2 = outer * outer * (1.0 + 1e-12);
  const double inner2 = inner * inner * (1.0 - 1e-12);
  const long n = static_cast<long>(std::floor(outer + 1e-9));

  std::vector<double> xs;
  std::vector<std::int32_t> counts;
  simd::DiscSet band;
  for (long j = -n; j <= n; ++j) {
    const double y = static_cast<double>(j) * step;
    xs.clear();
    for (long i = -n; i <= n; ++i) {
      const double q = static_cast<double>(i) * i + static_cast<double>(j) * j;
      if (q > outer2 || q < inner2) continue;
      xs.push_back(static_cast<double>(i) * step);
    }
    if (xs.empty()) continue;

    band = {};
    for (std::size_t d = 0; d < discs.size(); ++d) {
      const double dy = y - discs.cy[d];
      if (dy * dy < discs.r2[d]) band.push_back(discs.cx[d], discs.cy[d], discs.r2[d]);
    }
    counts.assign(xs.size(), 0);
    simd::accumulate_row_counts(xs, y, band, counts);
    on_row(y, std::span<const double>(xs), std::span<const std::int32_t>(counts));
  }
}

}  // namespace

int overlap_count_at(const Divisor& divisor, Complex z) {
  int count = 0;
  for (const DivisorEntry& e : divisor.entries()) {
    const double r = *disc_radius(e, divisor.params(), 0.0, DiscSign::plus);
    const double dx = z.real() - e.point.real();
    const double dy = z.imag() - e.point.imag();
    if (dx * dx + dy * dy < r * r) ++count;
  }
  return count;
}

int max_overlap(const Divisor& divisor, const Window& window) {
  const simd::DiscSet discs = collect_discs(divisor, 0.0, DiscSign::plus);
  int best = 0;
  sweep_window(discs, window, 0.0, [&](double, std::span<const double>, std::span<const std::int32_t> counts) {
    for (std::int32_t c : counts) best = std::max(best, static_cast<int>(c));
  });
  return best;
}

std::vector<Complex> coverage_defect(const Divisor& divisor, double c, DiscSign sign,
                                     const Window& window, double hole_radius) {
  if (hole_radius < 0.0 || hole_radius >= window.radius()) {
    throw std::invalid_argument("hole radius must lie in [0, window radius)");
  }
  const simd::DiscSet discs = collect_discs(divisor, c, sign);
  std::vector<Complex> uncovered;
  sweep_window(discs, window, hole_radius,
               [&](double y, std::span<const double> xs, std::span<const std::int32_t> counts) {
                 for (std::size_t i = 0; i < xs.size(); ++i) {
                   if (counts[i] == 0) uncovered.emplace_back(xs[i], y);
                 }
               });
  return uncovered;
}

DisjointnessResult pairwise_disjoint(const Divisor& divisor, double c, DiscSign sign) {
  const auto& entries = divisor.entries();
  std::vector<std::optional<double>> radii;
  radii.reserve(entries.size());
  for (const DivisorEntry& e : entries) radii.push_back(disc_radius(e, divisor.params(), c, sign));

  for (std::size_t a = 0; a < entries.size(); ++a) {
    if (!radii[a]) continue;
    for (std::size_t b = a + 1; b < entries.size(); ++b) {
      if (!radii[b]) continue;
      const double distance = std::abs(entries[a].point - entries[b].point);
      if (distance < *radii[a] + *radii[b]) return {false, std::make_pair(a, b)};
    }
  }
  return {};
}

GeometryVerdicts theorem_verdicts(const Divisor& divisor, const Window& window,
                                  std::span<const double> c_list, double hole_radius) {
  if (c_list.empty()) throw std::invalid_argument("C list must be nonempty");
  for (std::size_t i = 0; i < c_list.size(); ++i) {
    if (!(c_list[i] > 0.0)) throw std::invalid_argument("C values must be positive");
    if (i > 0 && c_list[i] < c_list[i - 1]) throw std::invalid_argument("C list must be sorted ascending");
  }
  if (hole_radius < 0.0 || hole_radius >= window.radius()) {
    throw std::invalid_argument("hole radius must lie in [0, window radius)");
  }

  GeometryVerdicts v;
  v.finite_overlap_bound = max_overlap(divisor, window);
  for (const DivisorEntry& e : divisor.entries()) {
    if (std::abs(e.point) <= window.radius()) ++v.entries_in_window;
  }
  v.hole_radius = hole_radius;

  v.sampling_sufficient_holds = true;
  for (double c : c_list) {
    CoverageCheck necessary{c, false, coverage_defect(divisor, c, DiscSign::plus, window, 0.0)};
    necessary.holds = necessary.uncovered.empty();
    if (necessary.holds && !v.sampling_necessary_witness) v.sampling_necessary_witness = c;
    v.sampling_necessary_checks.push_back(std::move(necessary));

    CoverageCheck sufficient{c, false, coverage_defect(divisor, c, DiscSign::minus, window, hole_radius)};
    sufficient.holds = sufficient.uncovered.empty();
    v.sampling_sufficient_holds = v.sampling_sufficient_holds && sufficient.holds;
    v.sampling_sufficient_checks.push_back(std::move(sufficient));

    const DisjointnessResult shrunk = pairwise_disjoint(divisor, c, DiscSign::minus);
    if (shrunk.disjoint && !v.interpolation_necessary_witness) v.interpolation_necessary_witness = c;
    v.interpolation_necessary_checks.push_back({c, shrunk.disjoint, shrunk.violation});

    const DisjointnessResult grown = pairwise_disjoint(divisor, c, DiscSign::plus);
    if (grown.disjoint && !v.interpolation_sufficient_witness) v.interpolation_sufficient_witness = c;
    v.interpolation_sufficient_checks.push_back({c, grown.disjoint, grown.violation});
  }
  v.sampling_necessary_holds = v.sampling_necessary_witness.has_value();
  v.interpolation_necessary_holds = v.interpolation_necessary_witness.has_value();
  v.interpolation_sufficient_holds = v.interpolation_sufficient_witness.has_value();

  v.uniqueness_check = {0.0, false, coverage_defect(divisor, 0.0, DiscSign::plus, window, hole_radius)};
  v.uniqueness_check.holds = v.uniqueness_check.uncovered.empty();
  v.uniqueness_condition_holds = v.uniqueness_check.holds;

  if (v.entries_in_window >= 2) {
    v.exclusivity_consistent = !(v.sampling_sufficient_holds && v.interpolation_sufficient_holds);
  }
  return v;
}

Divisor rescale_to_unit_alpha(const Divisor& divisor) {
  const double s = std::sqrt(divisor.params().alpha());
  std::vector<DivisorEntry> entries = divisor.entries();
  for (DivisorEntry& e : entries) e.point *= s;
  return Divisor(FockParams(1.0), std::move(entries));
}

std::pair<Divisor, std::size_t> merge_coincident(FockParams params, std::vector<DivisorEntry> entries) {
  std::vector<DivisorEntry> out;
  std::map<std::pair<double, double>, std::size_t> index;
  std::size_t merges = 0;
  for (const DivisorEntry& e : entries) {
    const auto [it, inserted] = index.emplace(std::make_pair(e.point.real(), e.point.imag()), out.size());
    if (inserted) {
      out.push_back(e);
    } else {
      out[it->second].multiplicity += e.multiplicity;
      ++merges;
    }
  }
  return {Divisor(params, std::move(out)), merges};
}

std::string divisor_digest(const Divisor& divisor) {
  std::uint64_t hash = 1469598103934665603ULL;
  auto feed = [&](const char* text) {
    for (const char* p = text; *p; ++p) {
      hash ^= static_cast<unsigned char>(*p);
      hash *= 1099511628211ULL;
    }
  };
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.17g;", divisor.params().alpha());
  feed(buf);
  for (const DivisorEntry& e : divisor.entries()) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%d;", e.point.real(), e.point.imag(), e.multiplicity);
    feed(buf);
  }
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

}  // namespace fockspace
