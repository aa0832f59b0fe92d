#pragma once

#include <Eigen/Dense>

#include <optional>
#include <string>
#include <vector>

#include "fockspace/fock_core.hpp"
#include "fockspace/geometry.hpp"
#include "fockspace/kernels.hpp"

namespace fockspace {

/// Labels (lambda, k), k < m_lambda, in divisor order with k ascending.
std::vector<AtomLabel> measurement_labels(const Divisor& divisor);

struct MeasurementVector {
  std::vector<AtomLabel> labels;
  std::vector<Complex> values;

  double l2_norm() const;
};

/// v_lambda^(k) = <f, T_lambda e_k>.
MeasurementVector measurements(const FockFunction& f, const Divisor& divisor);

/// A((lambda,k), n) = <e_n, T_lambda e_k>, so that A c is the measurement
/// vector of sum_n c_n e_n.
struct AnalysisMatrix {
  std::vector<AtomLabel> labels;
  int max_degree = 0;
  Eigen::MatrixXcd entries;
};

AnalysisMatrix analysis_matrix(const Divisor& divisor, int max_degree);

/// Extreme singular values of an analysis or synthesis operator. ratio is
/// (smax/smin)^2, infinite when smin == 0.
struct SpectralSummary {
  double smin = 0.0;
  double smax = 0.0;
  double ratio = 0.0;
  std::optional<int> max_degree;   // truncation degree, when one applies
  bool rank_deficient_by_construction = false;
  std::string divisor_digest;
};

/// Fewer rows than columns yields smin = 0 with the rank-deficiency flag set.
SpectralSummary frame_bounds(const AnalysisMatrix& a);

/// Square roots of the extreme Gram eigenvalues, so ratio is the condition
/// number of G.
SpectralSummary riesz_bounds(const GramMatrix& g);

struct InterpolationSolution {
  FockFunction function;
  std::vector<Complex> coefficients;  // on measurement_labels(divisor)
  double residual = 0.0;              // max |<f, T_lambda e_k> - v|
  double norm = 0.0;
  double gram_condition = 0.0;
  bool truncated = false;
  long retained_rank = 0;
};

inline constexpr double kDefaultRcond = 1e-12;

/// Minimal-norm f with <f, T_lambda e_k> = v_lambda^(k), built on the atom span
/// by an eigen pseudo-inverse of the Gram matrix. Eigenvalues below
/// rcond * largest are dropped and flagged.
InterpolationSolution min_norm_interpolate(const Divisor& divisor, const MeasurementVector& data,
                                           double rcond = kDefaultRcond);

/// Mass of e_n in the centered disc of the given radius, by radial quadrature.
double basis_window_mass(int n, double radius, const FockParams& params);

/// Largest fraction of window mass carried by a unit-norm degree-<=N function
/// whose measurements on the divisor vanish. Throws PreconditionError when the
/// total multiplicity reaches N + 1.
double hole_mass_experiment(const Divisor& divisor, int max_degree, const Window& window);

}  // namespace fockspace
