#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace fockspace {

using Complex = std::complex<double>;

/// Weight parameter of the space: norm (alpha/pi) * int |f|^2 exp(-alpha |z|^2) dm.
class FockParams {
 public:
  /// Throws std::invalid_argument unless alpha is finite and positive.
  explicit FockParams(double alpha);

  double alpha() const noexcept { return alpha_; }

  friend bool operator==(const FockParams&, const FockParams&) = default;

 private:
  double alpha_;
};

/// coeff * T_center e_degree.
struct Atom {
  Complex center;
  int degree = 0;
  Complex coeff{1.0, 0.0};
};

/// Finite linear combination of translated basis functions. Closed under
/// translation, so isometry and composition laws hold exactly up to rounding.
class FockFunction {
 public:
  explicit FockFunction(FockParams params) : params_(params) {}
  FockFunction(FockParams params, std::vector<Atom> atoms);

  static FockFunction basis(FockParams params, int degree, Complex coeff = 1.0);
  static FockFunction atom(FockParams params, Complex center, int degree, Complex coeff = 1.0);

  const FockParams& params() const noexcept { return params_; }
  const std::vector<Atom>& atoms() const noexcept { return atoms_; }
  bool empty() const noexcept { return atoms_.empty(); }

  /// Throws ParameterMismatch when the weights differ.
  FockFunction operator+(const FockFunction& other) const;
  FockFunction scaled(Complex factor) const;

  /// Sums coefficients of atoms with bitwise-equal (center, degree); output is
  /// ordered by (Re center, Im center, degree). Zero coefficients are kept.
  FockFunction merged() const;

 private:
  FockParams params_;
  std::vector<Atom> atoms_;
};

struct BasisCoefficients {
  FockParams params;
  std::vector<Complex> coeffs;  // coefficient of e_n, n = 0..N
  /// ||f||^2 - sum |c_n|^2, the energy beyond degree N.
  double truncation_defect = 0.0;
};

/// exp(re + i im) evaluated as e^re (cos im + i sin im).
Complex exp_split(double re, double im);

/// e_k(z) = sqrt(alpha^k / k!) z^k, evaluated in the log domain.
Complex basis_eval(int k, Complex z, const FockParams& params);

/// coeff * exp(alpha conj(center) zeta - alpha |center|^2 / 2) * e_k(zeta - center).
Complex atom_eval(const Atom& atom, Complex zeta, const FockParams& params);

Complex evaluate(const FockFunction& f, Complex zeta);

struct Composition {
  Complex phase;  // unimodular
  Complex shift;
};

/// T_w T_z = phase * T_{w+z} with phase = exp(-i alpha Im(conj(z) w)).
/// Every phase convention in the library goes through this function.
Composition compose_phase(Complex w, Complex z, const FockParams& params);

FockFunction translate(const FockFunction& f, Complex z);

/// <f, g>, linear in f and antilinear in g.
Complex inner(const FockFunction& f, const FockFunction& g);
double norm(const FockFunction& f);

/// Projection onto span{e_0, ..., e_N}.
BasisCoefficients to_basis_coeffs(const FockFunction& f, int max_degree);

/// Grid estimate of sup |f(z)| exp(-alpha |z|^2 / 2) over the square
/// |Re z|, |Im z| <= radius. Grid nodes are step * (i, j) for integer i, j.
double sup_norm_estimate(const FockFunction& f, double radius, double step);

}  // namespace fockspace
