#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fockspace/fock_core.hpp"

namespace fockspace {

struct DivisorEntry {
  Complex point;
  int multiplicity = 1;

  friend bool operator==(const DivisorEntry&, const DivisorEntry&) = default;
};

/// Finite divisor {(lambda, m_lambda)}: distinct points with positive multiplicities.
class Divisor {
 public:
  /// Throws std::invalid_argument on a nonpositive multiplicity, a non-finite
  /// point or coincident points.
  Divisor(FockParams params, std::vector<DivisorEntry> entries);

  const FockParams& params() const noexcept { return params_; }
  const std::vector<DivisorEntry>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  long total_multiplicity() const noexcept;

 private:
  FockParams params_;
  std::vector<DivisorEntry> entries_;
};

/// Disc {|z| <= radius} sampled on the lattice grid_step * Z^2. Stands in for
/// the whole plane in every geometric check.
class Window {
 public:
  /// Requires radius > 0 and 0 < grid_step <= radius / 10.
  Window(double radius, double grid_step);

  double radius() const noexcept { return radius_; }
  double grid_step() const noexcept { return grid_step_; }

 private:
  double radius_;
  double grid_step_;
};

enum class DiscSign { plus, minus };

/// sqrt(m/alpha) + C, or sqrt(m/alpha) - C when that exceeds 1e-12 sqrt(m/alpha)
/// (otherwise the entry drops out and nullopt is returned).
std::optional<double> disc_radius(const DivisorEntry& entry, const FockParams& params, double c,
                                  DiscSign sign);

/// Number of open discs D(lambda, sqrt(m/alpha)) containing z.
int overlap_count_at(const Divisor& divisor, Complex z);

/// Largest overlap count over the window grid: a lower estimate of the supremum.
int max_overlap(const Divisor& divisor, const Window& window);

/// Grid points with hole_radius <= |z| <= R lying in no disc D(lambda, r)
/// where r comes from disc_radius(c, sign). Row-major, increasing Im then Re.
std::vector<Complex> coverage_defect(const Divisor& divisor, double c, DiscSign sign,
                                     const Window& window, double hole_radius);

struct DisjointnessResult {
  bool disjoint = true;
  /// Indices into the divisor of the first overlapping pair found.
  std::optional<std::pair<std::size_t, std::size_t>> violation;
};

/// Open discs: tangency counts as disjoint.
DisjointnessResult pairwise_disjoint(const Divisor& divisor, double c, DiscSign sign);

struct CoverageCheck {
  double c = 0.0;
  bool holds = false;
  std::vector<Complex> uncovered;
};

struct DisjointCheck {
  double c = 0.0;
  bool holds = false;
  std::optional<std::pair<std::size_t, std::size_t>> violation;
};

/// Window verdicts for the geometric conditions. "There exists C" verdicts carry
/// the smallest witness from the tested list; "for every C" is reported per C.
struct GeometryVerdicts {
  int finite_overlap_bound = 0;
  std::size_t entries_in_window = 0;

  std::vector<CoverageCheck> sampling_necessary_checks;  // cover with +C, no hole
  bool sampling_necessary_holds = false;
  std::optional<double> sampling_necessary_witness;

  std::vector<CoverageCheck> sampling_sufficient_checks;  // cover with -C outside the hole
  bool sampling_sufficient_holds = false;                 // all tested C

  std::vector<DisjointCheck> interpolation_necessary_checks;  // disjoint with -C
  bool interpolation_necessary_holds = false;
  std::optional<double> interpolation_necessary_witness;

  std::vector<DisjointCheck> interpolation_sufficient_checks;  // disjoint with +C
  bool interpolation_sufficient_holds = false;
  std::optional<double> interpolation_sufficient_witness;

  double hole_radius = 0.0;
  CoverageCheck uniqueness_check;  // C = 0 outside the hole
  bool uniqueness_condition_holds = false;

  /// Not both (sampling-sufficient for every C) and (interpolation-sufficient
  /// for some C). Vacuously true with fewer than two entries in the window.
  bool exclusivity_consistent = true;
};

/// c_list must be nonempty, positive and sorted ascending; hole_radius < R.
GeometryVerdicts theorem_verdicts(const Divisor& divisor, const Window& window,
                                  std::span<const double> c_list, double hole_radius);

/// z -> sqrt(alpha) z with alpha -> 1; radii scale by sqrt(alpha) as well.
Divisor rescale_to_unit_alpha(const Divisor& divisor);

/// Merges coincident points by summing multiplicities; returns the number of
/// merges performed. Order of first occurrence is kept.
std::pair<Divisor, std::size_t> merge_coincident(FockParams params, std::vector<DivisorEntry> entries);

/// Stable 64-bit hex digest of alpha and the entries.
std::string divisor_digest(const Divisor& divisor);

}  // namespace fockspace
