#include "fockspace/numerics.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "fockspace/errors.hpp"

namespace fockspace {

std::vector<AtomLabel> measurement_labels(const Divisor& divisor) {
  std::vector<AtomLabel> labels;
  labels.reserve(static_cast<std::size_t>(divisor.total_multiplicity()));
  for (const DivisorEntry& e : divisor.entries()) {
    for (int k = 0; k < e.multiplicity; ++k) labels.push_back({e.point, k});
  }
  return labels;
}

double MeasurementVector::l2_norm() const {
  double sum = 0.0;
  for (const Complex& v : values) sum += std::norm(v);
  return std::sqrt(sum);
}

MeasurementVector measurements(const FockFunction& f, const Divisor& divisor) {
  if (!(f.params() == divisor.params())) throw ParameterMismatch("function and divisor use different alpha");
  MeasurementVector out{measurement_labels(divisor), {}};
  out.values.reserve(out.labels.size());
  for (const AtomLabel& label : out.labels) {
    Complex v{};
    for (const Atom& a : f.atoms()) {
      v += a.coeff * atom_overlap({a.center, a.degree}, label, f.params());
    }
    out.values.push_back(v);
  }
  return out;
}

AnalysisMatrix analysis_matrix(const Divisor& divisor, int max_degree) {
  if (max_degree < 0) throw std::invalid_argument("truncation degree must be nonnegative");
  AnalysisMatrix a{measurement_labels(divisor), max_degree, {}};
  const auto rows = static_cast<Eigen::Index>(a.labels.size());
  a.entries.resize(rows, max_degree + 1);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const AtomLabel& label = a.labels[static_cast<std::size_t>(r)];
    for (int n = 0; n <= max_degree; ++n) {
      a.entries(r, n) = std::conj(displacement_element(label.center, n, label.degree, divisor.params()));
    }
  }
  return a;
}

SpectralSummary frame_bounds(const AnalysisMatrix& a) {
  if (a.entries.size() == 0) throw std::invalid_argument("frame bounds of an empty analysis matrix");
  SpectralSummary s;
  s.max_degree = a.max_degree;
  const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a.entries);
  const Eigen::VectorXd& sv = svd.singularValues();
  s.smax = sv.maxCoeff();
  if (a.entries.rows() < a.entries.cols()) {
    s.smin = 0.0;
    s.rank_deficient_by_construction = true;
  } else {
    s.smin = sv.minCoeff();
  }
  s.ratio = s.smin > 0.0 ? (s.smax / s.smin) * (s.smax / s.smin) : std::numeric_limits<double>::infinity();
  return s;
}

SpectralSummary riesz_bounds(const GramMatrix& g) {
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(g.entries, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& ev = eig.eigenvalues();
  const double lo = ev(0);
  const double hi = ev(ev.size() - 1);
  SpectralSummary s;
  s.smin = std::sqrt(std::max(0.0, lo));
  s.smax = std::sqrt(std::max(0.0, hi));
  s.ratio = lo > 0.0 ? hi / lo : std::numeric_limits<double>::infinity();
  return s;
}

InterpolationSolution min_norm_interpolate(const Divisor& divisor, const MeasurementVector& data,
                                           double rcond) {
  if (divisor.empty()) throw std::invalid_argument("interpolation on an empty divisor");
  if (!(rcond > 0.0)) throw std::invalid_argument("rcond must be positive");
  const std::vector<AtomLabel> labels = measurement_labels(divisor);
  if (data.labels != labels || data.values.size() != labels.size()) {
    throw std::invalid_argument("data labels do not match the divisor");
  }

  const GramMatrix g = gram_matrix(labels, divisor.params());
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(g.entries);
  const Eigen::VectorXd& ev = eig.eigenvalues();
  const Eigen::MatrixXcd& u = eig.eigenvectors();
  const double largest = ev(ev.size() - 1);
  const double cutoff = rcond * largest;

  const auto n = static_cast<Eigen::Index>(labels.size());
  const Eigen::VectorXcd v = Eigen::Map<const Eigen::VectorXcd>(data.values.data(), n);
  const Eigen::VectorXcd projected = u.adjoint() * v;
  Eigen::VectorXcd scaled = Eigen::VectorXcd::Zero(n);
  InterpolationSolution sol{FockFunction(divisor.params()), {}, 0.0, 0.0, 0.0, false, 0};
  for (Eigen::Index i = 0; i < n; ++i) {
    if (ev(i) > cutoff) {
      scaled(i) = projected(i) / ev(i);
      ++sol.retained_rank;
    }
  }
  sol.truncated = sol.retained_rank < n;
  const Eigen::VectorXcd c = u * scaled;

  std::vector<Atom> atoms;
  atoms.reserve(labels.size());
  sol.coefficients.resize(labels.size());
  for (Eigen::Index i = 0; i < n; ++i) {
    sol.coefficients[i] = c(i);
    atoms.push_back({labels[i].center, labels[i].degree, c(i)});
  }
  sol.function = FockFunction(divisor.params(), std::move(atoms));

  const MeasurementVector achieved = measurements(sol.function, divisor);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    sol.residual = std::max(sol.residual, std::abs(achieved.values[i] - data.values[i]));
  }
  sol.norm = std::sqrt(std::max(0.0, c.dot(v).real()));
  sol.gram_condition = ev(0) > 0.0 ? largest / ev(0) : std::numeric_limits<double>::infinity();
  return sol;
}

double basis_window_mass(int n, double radius, const FockParams& params) {
  if (n < 0) throw std::invalid_argument("degree must be nonnegative");
  if (radius <= 0.0) return 0.0;
  // Substituting t = alpha r^2 turns the disc mass into int_0^{alpha R^2} t^n e^{-t} / n! dt.
  const double upper = params.alpha() * radius * radius;
  const double panel = std::max(0.5, 0.5 * std::sqrt(n + 1.0));
  const int panels = std::max(1, static_cast<int>(std::ceil(upper / panel)));
  const double width = upper / panels;
  static const QuadratureRule rule = gauss_legendre(32);
  const double log_norm = std::lgamma(n + 1.0);

  double mass = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double left = p * width;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double t = left + 0.5 * width * (rule.nodes[i] + 1.0);
      const double log_density = (n == 0 ? 0.0 : n * std::log(t)) - t - log_norm;
      mass += 0.5 * width * rule.weights[i] * std::exp(log_density);
    }
  }
  return std::min(1.0, mass);
}

double hole_mass_experiment(const Divisor& divisor, int max_degree, const Window& window) {
  if (max_degree < 0) throw std::invalid_argument("truncation degree must be nonnegative");
  const long constraints = divisor.total_multiplicity();
  if (constraints >= max_degree + 1) {
    throw PreconditionError("total multiplicity must be below degree + 1 for a nonzero vanishing subspace");
  }
  const int dim = max_degree + 1;

  Eigen::MatrixXcd null_basis;
  if (divisor.empty()) {
    null_basis = Eigen::MatrixXcd::Identity(dim, dim);
  } else {
    const AnalysisMatrix a = analysis_matrix(divisor, max_degree);
    const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a.entries, Eigen::ComputeFullV);
    const Eigen::VectorXd& sv = svd.singularValues();
    const double cutoff = kDefaultRcond * std::max(1.0, sv.size() ? sv(0) : 0.0);
    Eigen::Index rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
      if (sv(i) > cutoff) ++rank;
    }
    null_basis = svd.matrixV().rightCols(dim - rank);
  }

  Eigen::VectorXd masses(dim);
  for (int n = 0; n < dim; ++n) masses(n) = basis_window_mass(n, window.radius(), divisor.params());

  const Eigen::MatrixXcd restricted = null_basis.adjoint() * masses.asDiagonal() * null_basis;
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(restricted, Eigen::EigenvaluesOnly);
  return eig.eigenvalues().maxCoeff();
}

}  // namespace fockspace
