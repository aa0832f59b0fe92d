#pragma once

#include <Eigen/Dense>

#include <span>
#include <vector>

#include "fockspace/fock_core.hpp"

namespace fockspace {

/// Identifies the unit-norm atom T_center e_degree.
struct AtomLabel {
  Complex center;
  int degree = 0;

  friend bool operator==(const AtomLabel&, const AtomLabel&) = default;
};

/// G(p, q) = <T_{c_q} e_{k_q}, T_{c_p} e_{k_p}> over an ordered family of atoms.
struct GramMatrix {
  FockParams params;
  std::vector<AtomLabel> labels;
  Eigen::MatrixXcd entries;
};

/// Generalized Laguerre value L_n^(a)(x) as mantissa * exp(log_scale). The
/// three-term recurrence in n is rescaled on the fly so large degrees and
/// arguments do not overflow.
struct ScaledValue {
  double mantissa = 0.0;
  double log_scale = 0.0;
};
ScaledValue laguerre_scaled(int n, double a, double x);

/// <T_z e_k, e_j>. With b = sqrt(alpha) conj(z) and x = |b|^2:
///   j >= k:  e^{-x/2} sqrt(k!/j!) b^{j-k} L_k^{(j-k)}(x)
///   j <  k:  e^{-x/2} sqrt(j!/k!) (-conj(b))^{k-j} L_j^{(k-j)}(x)
Complex displacement_element(Complex z, int j, int k, const FockParams& params);

/// <T_a e_{ka}, T_b e_{kb}> for unit atoms, via T_{-b} T_a = phase * T_{a-b}.
Complex atom_overlap(const AtomLabel& a, const AtomLabel& b, const FockParams& params);

/// Throws DuplicateLabel on repeated labels and std::invalid_argument on an
/// empty family.
GramMatrix gram_matrix(std::span<const AtomLabel> family, const FockParams& params);

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
QuadratureRule gauss_legendre(int n);

/// (alpha/pi) int_{|z|<=radius} f conj(g) exp(-alpha|z|^2) dm by Gauss-Legendre
/// in the radius and the trapezoid rule in the angle. Brute-force reference for
/// the closed forms; requires radial_nodes, angular_nodes >= 8.
Complex quadrature_inner_oracle(const FockFunction& f, const FockFunction& g, double radius,
                                int radial_nodes, int angular_nodes);

/// max |center| + sqrt((max degree + 10) / alpha) + 4 over the atoms of f and g.
double default_oracle_radius(const FockFunction& f, const FockFunction& g);

}  // namespace fockspace
