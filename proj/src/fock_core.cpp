#include "fockspace/fock_core.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <tuple>

#include "fockspace/errors.hpp"
#include "fockspace/kernels.hpp"

namespace fockspace {

FockParams::FockParams(double alpha) : alpha_(alpha) {
  if (!std::isfinite(alpha) || alpha <= 0.0) {
    throw std::invalid_argument("alpha must be finite and positive");
  }
}

FockFunction::FockFunction(FockParams params, std::vector<Atom> atoms)
    : params_(params), atoms_(std::move(atoms)) {
  for (const Atom& a : atoms_) {
    if (a.degree < 0) throw std::invalid_argument("atom degree must be nonnegative");
    if (!std::isfinite(a.coeff.real()) || !std::isfinite(a.coeff.imag())) {
      throw std::invalid_argument("atom coefficient must be finite");
    }
  }
}

FockFunction FockFunction::basis(FockParams params, int degree, Complex coeff) {
  return FockFunction(params, {Atom{Complex{}, degree, coeff}});
}

FockFunction FockFunction::atom(FockParams params, Complex center, int degree, Complex coeff) {
  return FockFunction(params, {Atom{center, degree, coeff}});
}

FockFunction FockFunction::operator+(const FockFunction& other) const {
  if (!(params_ == other.params_)) throw ParameterMismatch("cannot add functions with different alpha");
  std::vector<Atom> atoms = atoms_;
  atoms.insert(atoms.end(), other.atoms_.begin(), other.atoms_.end());
  return FockFunction(params_, std::move(atoms));
}

FockFunction FockFunction::scaled(Complex factor) const {
  std::vector<Atom> atoms = atoms_;
  for (Atom& a : atoms) a.coeff *= factor;
  return FockFunction(params_, std::move(atoms));
}

FockFunction FockFunction::merged() const {
  auto key = [](const Atom& a) { return std::make_tuple(a.center.real(), a.center.imag(), a.degree); };
  std::vector<Atom> sorted = atoms_;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [&](const Atom& a, const Atom& b) { return key(a) < key(b); });
  std::vector<Atom> out;
  for (const Atom& a : sorted) {
    if (!out.empty() && key(out.back()) == key(a)) {
      out.back().coeff += a.coeff;
    } else {
      out.push_back(a);
    }
  }
  return FockFunction(params_, std::move(out));
}

Complex exp_split(double re, double im) {
  const double mag = std::exp(re);
  return {mag * std::cos(im), mag * std::sin(im)};
}

namespace {

// log sqrt(alpha^k / k!)
double log_basis_scale(int k, double alpha) {
  return 0.5 * (k * std::log(alpha) - std::lgamma(k + 1.0));
}

}  // namespace

Complex basis_eval(int k, Complex z, const FockParams& params) {
  if (k == 0) return 1.0;
  if (z == Complex{}) return 0.0;
  const double log_mag = k * std::log(std::abs(z)) + log_basis_scale(k, params.alpha());
  return exp_split(log_mag, k * std::arg(z));
}

Complex atom_eval(const Atom& atom, Complex zeta, const FockParams& params) {
  const double alpha = params.alpha();
  const Complex cross = std::conj(atom.center) * zeta;
  double log_mag = alpha * cross.real() - 0.5 * alpha * std::norm(atom.center);
  double phase = alpha * cross.imag();
  if (atom.degree > 0) {
    const Complex offset = zeta - atom.center;
    if (offset == Complex{}) return 0.0;
    log_mag += atom.degree * std::log(std::abs(offset)) + log_basis_scale(atom.degree, alpha);
    phase += atom.degree * std::arg(offset);
  }
  return atom.coeff * exp_split(log_mag, phase);
}

Complex evaluate(const FockFunction& f, Complex zeta) {
  Complex sum{};
  for (const Atom& a : f.atoms()) sum += atom_eval(a, zeta, f.params());
  return sum;
}

Composition compose_phase(Complex w, Complex z, const FockParams& params) {
  const double angle = -params.alpha() * (std::conj(z) * w).imag();
  return {exp_split(0.0, angle), w + z};
}

FockFunction translate(const FockFunction& f, Complex z) {
  std::vector<Atom> atoms;
  atoms.reserve(f.atoms().size());
  for (const Atom& a : f.atoms()) {
    const Composition c = compose_phase(z, a.center, f.params());
    atoms.push_back(Atom{c.shift, a.degree, a.coeff * c.phase});
  }
  return FockFunction(f.params(), std::move(atoms));
}

Complex inner(const FockFunction& f, const FockFunction& g) {
  if (!(f.params() == g.params())) throw ParameterMismatch("inner product of functions with different alpha");
  Complex sum{};
  for (const Atom& a : f.atoms()) {
    for (const Atom& b : g.atoms()) {
      sum += a.coeff * std::conj(b.coeff) *
             atom_overlap({a.center, a.degree}, {b.center, b.degree}, f.params());
    }
  }
  return sum;
}

double norm(const FockFunction& f) {
  if (f.empty()) return 0.0;
  return std::sqrt(std::max(0.0, inner(f, f).real()));
}

BasisCoefficients to_basis_coeffs(const FockFunction& f, int max_degree) {
  if (max_degree < 0) throw std::invalid_argument("max_degree must be nonnegative");
  BasisCoefficients out{f.params(), std::vector<Complex>(max_degree + 1), 0.0};
  double captured = 0.0;
  for (int n = 0; n <= max_degree; ++n) {
    Complex c{};
    for (const Atom& a : f.atoms()) {
      c += a.coeff * displacement_element(a.center, n, a.degree, f.params());
    }
    out.coeffs[n] = c;
    captured += std::norm(c);
  }
  const double total = f.empty() ? 0.0 : inner(f, f).real();
  out.truncation_defect = total - captured;
  return out;
}

double sup_norm_estimate(const FockFunction& f, double radius, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("step must be positive");
  if (radius < 0.0) throw std::invalid_argument("radius must be nonnegative");
  const double alpha = f.params().alpha();
  const long n = static_cast<long>(std::floor(radius / step + 1e-9));
  double best = 0.0;
  for (long i = -n; i <= n; ++i) {
    for (long j = -n; j <= n; ++j) {
      const Complex z{i * step, j * step};
      const double weighted = std::abs(evaluate(f, z)) * std::exp(-0.5 * alpha * std::norm(z));
      best = std::max(best, weighted);
    }
  }
  return best;
}

}  // namespace fockspace
