#pragma once

#include <string>
#include <vector>

#include "fockspace/geometry.hpp"

namespace fockspace::cli {

/// One ring of a ring generator: every point sits at `radius` with the same
/// multiplicity. `disc_radius` is the radius of the disc the generator
/// reasons about (sqrt(m/alpha) - C for covering, + C for disjoint).
struct RingSchedule {
  double radius = 0.0;
  int count = 0;
  int multiplicity = 0;
  double disc_radius = 0.0;
};

struct GeneratedDivisor {
  Divisor divisor;
  std::string family;
  std::vector<RingSchedule> rings;  // empty for lattices
  std::string contract;             // geometric property verified before emission
};

/// Square lattice spacing*(Z + iZ) clipped to |lambda| <= window, constant multiplicity.
GeneratedDivisor generate_lattice(FockParams params, double spacing, int multiplicity, double window);

/// A central point plus concentric rings whose shrunken discs
/// D(lambda, sqrt(m/alpha) - C) cover {|z| <= window}. The covering radius of a
/// ring at radius rho is (1 + growth * sqrt(alpha) rho) / sqrt(alpha), so
/// multiplicities grow without bound along the family. Ring spacing and point
/// counts follow from the exact band each ring covers.
GeneratedDivisor generate_covering_rings(FockParams params, double c, double window, double growth = 0.25);

/// A central point plus rings of multiplicity 1 + n * mult_step placed so the
/// enlarged discs D(lambda, sqrt(m/alpha) + C) are pairwise disjoint.
GeneratedDivisor generate_disjoint_rings(FockParams params, double c, double window, int mult_step = 1);

}  // namespace fockspace::cli
