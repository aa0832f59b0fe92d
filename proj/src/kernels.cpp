#include "fockspace/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>
#include <tuple>

#include "fockspace/errors.hpp"

namespace fockspace {

ScaledValue laguerre_scaled(int n, double a, double x) {
  constexpr double kRescaleAbove = 1e200;
  const double kRescaleLog = std::log(kRescaleAbove);
  if (n < 0) throw std::invalid_argument("Laguerre degree must be nonnegative");
  double prev = 1.0;
  if (n == 0) return {prev, 0.0};
  double cur = 1.0 + a - x;
  double log_scale = 0.0;
  for (int m = 1; m < n; ++m) {
    const double next = ((2.0 * m + 1.0 + a - x) * cur - (m + a) * prev) / (m + 1.0);
    prev = cur;
    cur = next;
    if (std::abs(cur) > kRescaleAbove) {
      cur /= kRescaleAbove;
      prev /= kRescaleAbove;
      log_scale += kRescaleLog;
    }
  }
  return {cur, log_scale};
}

Complex displacement_element(Complex z, int j, int k, const FockParams& params) {
  if (j < 0 || k < 0) throw std::invalid_argument("degrees must be nonnegative");
  const Complex b = std::sqrt(params.alpha()) * std::conj(z);
  if (b == Complex{}) return j == k ? 1.0 : 0.0;
  const double x = std::norm(b);

  const int low = std::min(j, k);
  const int gap = std::abs(j - k);
  const Complex base = j >= k ? b : -std::conj(b);
  const double log_factorials = 0.5 * (std::lgamma(low + 1.0) - std::lgamma(std::max(j, k) + 1.0));

  const ScaledValue lag = laguerre_scaled(low, gap, x);
  if (lag.mantissa == 0.0) return 0.0;
  const double log_mag = -0.5 * x + log_factorials + gap * std::log(std::abs(b)) + lag.log_scale +
                         std::log(std::abs(lag.mantissa));
  double phase = gap * std::arg(base);
  if (lag.mantissa < 0.0) phase += std::numbers::pi;
  return exp_split(log_mag, phase);
}

Complex atom_overlap(const AtomLabel& a, const AtomLabel& b, const FockParams& params) {
  const Composition c = compose_phase(-b.center, a.center, params);
  return c.phase * displacement_element(c.shift, b.degree, a.degree, params);
}

GramMatrix gram_matrix(std::span<const AtomLabel> family, const FockParams& params) {
  if (family.empty()) throw std::invalid_argument("Gram matrix of an empty family");
  std::set<std::tuple<double, double, int>> seen;
  for (const AtomLabel& l : family) {
    if (!seen.emplace(l.center.real(), l.center.imag(), l.degree).second) {
      throw DuplicateLabel("duplicate atom label in Gram family");
    }
  }
  const auto n = static_cast<Eigen::Index>(family.size());
  GramMatrix g{params, {family.begin(), family.end()}, Eigen::MatrixXcd(n, n)};
  for (Eigen::Index p = 0; p < n; ++p) {
    for (Eigen::Index q = p; q < n; ++q) {
      const Complex v = atom_overlap(family[q], family[p], params);
      g.entries(p, q) = v;
      g.entries(q, p) = std::conj(v);
    }
    g.entries(p, p) = Complex(g.entries(p, p).real(), 0.0);
  }
  return g;
}

QuadratureRule gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("Gauss-Legendre rule needs at least one node");
  QuadratureRule rule{std::vector<double>(n), std::vector<double>(n)};
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int m = 2; m <= n; ++m) {
        const double p2 = ((2.0 * m - 1.0) * x * p1 - (m - 1.0) * p0) / m;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0;
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // Recompute the derivative at the converged root for the weight.
    double p0 = 1.0;
    double p1 = x;
    for (int m = 2; m <= n; ++m) {
      const double p2 = ((2.0 * m - 1.0) * x * p1 - (m - 1.0) * p0) / m;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

Complex quadrature_inner_oracle(const FockFunction& f, const FockFunction& g, double radius,
                                int radial_nodes, int angular_nodes) {
  if (!(f.params() == g.params())) throw ParameterMismatch("oracle on functions with different alpha");
  if (!(radius > 0.0)) throw std::invalid_argument("oracle radius must be positive");
  if (radial_nodes < 8 || angular_nodes < 8) throw std::invalid_argument("oracle needs at least 8 nodes per axis");
  const double alpha = f.params().alpha();
  const QuadratureRule rule = gauss_legendre(radial_nodes);
  const double dtheta = 2.0 * std::numbers::pi / angular_nodes;

  Complex sum{};
  for (int i = 0; i < radial_nodes; ++i) {
    const double r = 0.5 * radius * (rule.nodes[i] + 1.0);
    const double radial_weight = 0.5 * radius * rule.weights[i] * r * std::exp(-alpha * r * r);
    Complex ring{};
    for (int t = 0; t < angular_nodes; ++t) {
      const Complex z = std::polar(r, t * dtheta);
      ring += evaluate(f, z) * std::conj(evaluate(g, z));
    }
    sum += radial_weight * ring;
  }
  return sum * dtheta * alpha / std::numbers::pi;
}

double default_oracle_radius(const FockFunction& f, const FockFunction& g) {
  double reach = 0.0;
  int degree = 0;
  for (const FockFunction* h : {&f, &g}) {
    for (const Atom& a : h->atoms()) {
      reach = std::max(reach, std::abs(a.center));
      degree = std::max(degree, a.degree);
    }
  }
  return reach + std::sqrt((degree + 10.0) / f.params().alpha()) + 4.0;
}

}  // namespace fockspace
