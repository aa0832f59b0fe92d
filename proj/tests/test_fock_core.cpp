#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "fockspace/errors.hpp"
#include "fockspace/fock_core.hpp"
#include "fockspace/kernels.hpp"
#include "oracles.hpp"

using namespace fockspace;
using namespace std::complex_literals;

namespace {

const FockParams kUnit(1.0);
const double kHalfExp = std::exp(-0.5);

void check_close(Complex a, Complex b, double tol) {
  CHECK(std::abs(a - b) <= tol);
}

}  // namespace

TEST_CASE("FockParams rejects nonpositive and non-finite alpha") {
  CHECK_THROWS_AS(FockParams(0.0), std::invalid_argument);
  CHECK_THROWS_AS(FockParams(-1.0), std::invalid_argument);
  CHECK_THROWS_AS(FockParams(std::nan("")), std::invalid_argument);
  CHECK(FockParams(2.5).alpha() == 2.5);
}

TEST_CASE("basis_eval") {
  CHECK(basis_eval(0, 3.0 + 4i, kUnit) == Complex(1.0));
  CHECK(basis_eval(0, 0.0, kUnit) == Complex(1.0));
  CHECK(basis_eval(3, 0.0, kUnit) == Complex(0.0));
  check_close(basis_eval(2, 1.0, kUnit), 1.0 / std::sqrt(2.0), 1e-15);

  SUBCASE("large degrees stay finite and match the running product") {
    for (int k : {50, 120, 200}) {
      const Complex v = basis_eval(k, 10.0, kUnit);
      REQUIRE(std::isfinite(v.real()));
      const Complex ref = oracle::basis_product(k, 10.0, 1.0);
      CHECK(std::abs(v - ref) <= 1e-12 * std::abs(ref));
    }
    const Complex big = basis_eval(200, 10.0, kUnit);
    const double log_ref = 200 * std::log(10.0) - 0.5 * std::lgamma(201.0);
    CHECK(std::abs(std::log(std::abs(big)) - log_ref) < 1e-12);
    CHECK(std::isfinite(std::abs(basis_eval(500, 3.0 - 2i, FockParams(2.0)))));
  }

  SUBCASE("complex argument and alpha") {
    const Complex z = 0.7 - 1.3i;
    for (double alpha : {0.5, 2.0}) {
      for (int k = 0; k < 15; ++k) {
        const Complex ref = oracle::basis_product(k, z, alpha);
        CHECK(std::abs(basis_eval(k, z, FockParams(alpha)) - ref) <= 1e-13 * (1 + std::abs(ref)));
      }
    }
  }
}

TEST_CASE("atom_eval") {
  check_close(atom_eval({0.0, 1, 1.0}, 1.0, kUnit), 1.0, 1e-15);
  check_close(atom_eval({1.0, 0, 1.0}, 0.0, kUnit), kHalfExp, 1e-15);
  check_close(atom_eval({1i, 0, 1.0}, 1i, kUnit), std::exp(0.5), 1e-14);
  // Direct substitution in the translation formula.
  const Complex zeta = -0.3 + 0.8i;
  const Atom a{1.2 - 0.4i, 3, 0.5 - 2.0i};
  const double alpha = 1.7;
  const Complex ref = a.coeff * std::exp(alpha * std::conj(a.center) * zeta - alpha / 2 * std::norm(a.center)) *
                      oracle::basis_product(3, zeta - a.center, alpha);
  check_close(atom_eval(a, zeta, FockParams(alpha)), ref, 1e-13);
  CHECK(atom_eval({2.0, 4, 1.0}, 2.0, kUnit) == Complex(0.0));
}

TEST_CASE("evaluate") {
  CHECK(evaluate(FockFunction(kUnit), 1.5i) == Complex(0.0));
  const FockFunction f = FockFunction::basis(kUnit, 0) + FockFunction::basis(kUnit, 1);
  check_close(evaluate(f, 1.0), 2.0, 1e-15);
  check_close(evaluate(FockFunction::atom(kUnit, 1.0, 0), 0.0), kHalfExp, 1e-15);
}

TEST_CASE("compose_phase") {
  const Composition id = compose_phase(0.0, 2.0 - 1i, kUnit);
  CHECK(id.phase == Complex(1.0));
  CHECK(id.shift == 2.0 - 1i);

  const Composition c = compose_phase(1i, 1.0, kUnit);
  check_close(c.phase, std::exp(-1i), 1e-15);
  CHECK(c.shift == 1.0 + 1i);

  const Composition real = compose_phase(1.0, 1.0, FockParams(2.0));
  CHECK(real.phase == Complex(1.0));
  CHECK(real.shift == Complex(2.0));

  SUBCASE("pointwise oracle for T_i T_1 e_0") {
    const FockFunction e0 = FockFunction::basis(kUnit, 0);
    const FockFunction lhs = translate(translate(e0, 1.0), 1i);
    const FockFunction rhs = translate(e0, 1.0 + 1i).scaled(c.phase);
    for (int i = 0; i < 5; ++i) {
      for (int j = 0; j < 4; ++j) {
        const Complex zeta(-1.0 + 0.5 * i, -0.75 + 0.5 * j);
        // Nested formula applied twice by hand.
        const Complex inner_val = std::exp(std::conj(1.0 + 0i) * (zeta - 1i) - 0.5);
        const Complex nested = std::exp(std::conj(1i) * zeta - 0.5) * inner_val;
        check_close(evaluate(lhs, zeta), nested, 1e-12 * (1 + std::abs(nested)));
        check_close(evaluate(rhs, zeta), nested, 1e-12 * (1 + std::abs(nested)));
      }
    }
  }
}

TEST_CASE("translate") {
  const FockFunction e0 = FockFunction::basis(kUnit, 0);
  const FockFunction same = translate(e0, 0.0);
  REQUIRE(same.atoms().size() == 1);
  CHECK(same.atoms()[0].center == Complex(0.0));
  CHECK(same.atoms()[0].coeff == Complex(1.0));

  const FockFunction t1 = translate(e0, 1.0);
  CHECK(t1.atoms()[0].center == Complex(1.0));
  CHECK(t1.atoms()[0].degree == 0);
  check_close(t1.atoms()[0].coeff, 1.0, 0.0);
  check_close(evaluate(t1, 0.0), kHalfExp, 1e-15);

  const FockFunction t2 = translate(t1, 1i);
  CHECK(t2.atoms()[0].center == 1.0 + 1i);
  check_close(t2.atoms()[0].coeff, std::exp(-1i), 1e-15);
  // Pointwise against the defining formula applied to T_1 e_0.
  for (int p = 0; p < 20; ++p) {
    const Complex zeta = std::polar(0.3 + 0.15 * p, 0.7 * p);
    const Complex direct = std::exp(std::conj(1i) * zeta - 0.5) * evaluate(t1, zeta - 1i);
    check_close(evaluate(t2, zeta), direct, 1e-10);
  }
}

TEST_CASE("inner") {
  const FockFunction e1 = FockFunction::basis(kUnit, 1);
  const FockFunction e2 = FockFunction::basis(kUnit, 2);
  check_close(inner(e1, e1), 1.0, 1e-15);
  check_close(inner(e1, e2), 0.0, 1e-15);

  const FockFunction t1e0 = FockFunction::atom(kUnit, 1.0, 0);
  const FockFunction e0 = FockFunction::basis(kUnit, 0);
  check_close(inner(t1e0, e0), kHalfExp, 1e-15);
  check_close(quadrature_inner_oracle(t1e0, e0, 10.0, 96, 192), kHalfExp, 1e-8);

  const Complex both = inner(FockFunction::atom(kUnit, 0.0, 0), t1e0);
  check_close(both, kHalfExp, 1e-15);
  CHECK(both.imag() == doctest::Approx(0.0));

  CHECK_THROWS_AS(inner(e1, FockFunction::basis(FockParams(2.0), 1)), ParameterMismatch);

  SUBCASE("orthonormality up to degree 60") {
    double worst = 0.0;
    for (int j = 0; j <= 60; ++j) {
      for (int k = 0; k <= 60; ++k) {
        const Complex v = inner(FockFunction::basis(kUnit, j), FockFunction::basis(kUnit, k));
        worst = std::max(worst, std::abs(v - (j == k ? 1.0 : 0.0)));
      }
    }
    CHECK(worst <= 1e-10);
  }

  SUBCASE("conjugate symmetry and positivity") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 30; ++t) {
      const FockParams p(0.5 + t % 3);
      const FockFunction f = oracle::random_function(rng, p, 6, 2.0, 6);
      const FockFunction g = oracle::random_function(rng, p, 4, 2.0, 6);
      check_close(inner(f, g), std::conj(inner(g, f)), 1e-12 * (1 + std::abs(inner(f, g))));
      CHECK(inner(f, f).real() >= -1e-12);
      CHECK(std::abs(inner(f, f).imag()) <= 1e-12 * (1 + inner(f, f).real()));
    }
  }
}

TEST_CASE("norm") {
  CHECK(norm(FockFunction(kUnit)) == 0.0);
  CHECK(norm(FockFunction::basis(kUnit, 0) + FockFunction::basis(kUnit, 1)) == doctest::Approx(std::sqrt(2.0)));
  for (int k : {0, 3, 11}) {
    CHECK(norm(FockFunction::atom(FockParams(1.5), 2.0 - 3i, k)) == doctest::Approx(1.0).epsilon(1e-14));
  }
  const FockFunction f = FockFunction::basis(kUnit, 0) + FockFunction::atom(kUnit, 4.0, 0);
  const double expected = std::sqrt(2.0 + 2.0 * std::exp(-8.0));
  CHECK(std::abs(norm(f) - expected) <= 1e-14);
  const double quad = std::sqrt(quadrature_inner_oracle(f, f, default_oracle_radius(f, f), 128, 256).real());
  CHECK(std::abs(quad - expected) <= 1e-9);
}

TEST_CASE("Parseval for atoms at the origin") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_int_distribution<int> deg(0, 20);
  for (int t = 0; t < 20; ++t) {
    std::vector<Atom> atoms;
    for (int i = 0; i < 8; ++i) atoms.push_back({0.0, deg(rng), Complex(u(rng), u(rng))});
    const FockFunction f(kUnit, atoms);
    double energy = 0.0;
    for (const Atom& a : f.merged().atoms()) energy += std::norm(a.coeff);
    const double n2 = norm(f) * norm(f);
    CHECK(std::abs(n2 - energy) <= 1e-12 * energy);
  }
}

TEST_CASE("merged keeps the function") {
  const FockFunction f(kUnit, {{1.0, 2, 1.0}, {1i, 0, 2.0}, {1.0, 2, -0.5i}, {1i, 0, 1.0}});
  const FockFunction m = f.merged();
  CHECK(m.atoms().size() == 2);
  for (Complex z : {0.0 + 0i, 0.3 - 1.1i, 2.0 + 0.5i}) check_close(evaluate(m, z), evaluate(f, z), 1e-14);
}

TEST_CASE("to_basis_coeffs") {
  const BasisCoefficients e3 = to_basis_coeffs(FockFunction::basis(kUnit, 3), 5);
  REQUIRE(e3.coeffs.size() == 6);
  for (int n = 0; n <= 5; ++n) check_close(e3.coeffs[n], n == 3 ? 1.0 : 0.0, 1e-15);
  CHECK(std::abs(e3.truncation_defect) <= 1e-15);

  const FockFunction t1 = FockFunction::atom(kUnit, 1.0, 0);
  const BasisCoefficients c0 = to_basis_coeffs(t1, 0);
  check_close(c0.coeffs[0], kHalfExp, 1e-15);
  CHECK(c0.truncation_defect == doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-13));

  const BasisCoefficients c40 = to_basis_coeffs(t1, 40);
  CHECK(c40.truncation_defect <= 1e-12);
  CHECK(c40.truncation_defect >= -1e-14);

  SUBCASE("Taylor coefficients of a translated e_0") {
    const FockParams p(1.3);
    const Complex z = 0.9 - 0.6i;
    const BasisCoefficients c = to_basis_coeffs(FockFunction::atom(p, z, 0), 25);
    for (int j = 0; j <= 25; ++j) {
      const Complex ref = std::pow(std::sqrt(1.3) * std::conj(z), j) * std::exp(-1.3 * std::norm(z) / 2) /
                          std::sqrt(std::tgamma(j + 1.0));
      check_close(c.coeffs[j], ref, 1e-14);
    }
  }

  SUBCASE("defect is nonnegative and decreasing") {
    std::mt19937_64 rng(3);
    const FockFunction f = oracle::random_function(rng, kUnit, 5, 2.0, 4);
    double previous = 1e300;
    for (int n = 0; n <= 60; n += 5) {
      const double d = to_basis_coeffs(f, n).truncation_defect;
      CHECK(d >= -1e-12);
      CHECK(d <= previous + 1e-12);
      previous = d;
    }
  }
}

TEST_CASE("sup_norm_estimate") {
  const FockFunction e0 = FockFunction::basis(kUnit, 0);
  CHECK(sup_norm_estimate(e0, 0.0, 0.1) == doctest::Approx(1.0));
  CHECK(sup_norm_estimate(e0, 3.0, 0.1) == doctest::Approx(1.0));
  CHECK(sup_norm_estimate(FockFunction::basis(kUnit, 1), 3.0, 0.01) == doctest::Approx(kHalfExp).epsilon(1e-4));
  CHECK(sup_norm_estimate(FockFunction::atom(kUnit, 2.0, 0), 4.0, 0.01) == doctest::Approx(1.0).epsilon(1e-12));

  const FockFunction e1 = FockFunction::basis(kUnit, 1);
  double previous = 0.0;
  for (double r : {0.5, 1.0, 2.0, 3.0}) {
    const double v = sup_norm_estimate(e1, r, 0.05);
    CHECK(v >= previous);
    previous = v;
  }
  CHECK_THROWS_AS(sup_norm_estimate(e1, 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("isometry and composition on random functions") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int t = 0; t < 40; ++t) {
    const FockParams p(t % 2 ? 0.7 : 1.8);
    const FockFunction f = oracle::random_function(rng, p, 1 + t % 10, 2.0, 8);
    const Complex z(5.0 / std::sqrt(2.0) * u(rng), 5.0 / std::sqrt(2.0) * u(rng));
    CHECK(std::abs(norm(translate(f, z)) - norm(f)) <= 1e-9 * norm(f));

    const Complex w(2.0 * u(rng), 2.0 * u(rng));
    const Complex v(2.0 * u(rng), 2.0 * u(rng));
    const Composition c = compose_phase(w, v, p);
    CHECK(std::abs(std::abs(c.phase) - 1.0) <= 1e-15);
    const FockFunction lhs = translate(translate(f, v), w);
    const FockFunction rhs = translate(f, c.shift);
    for (int i = 0; i < 20; ++i) {
      const Complex zeta(3.0 * u(rng), 3.0 * u(rng));
      const Complex r = c.phase * evaluate(rhs, zeta);
      CHECK(std::abs(evaluate(lhs, zeta) - r) <= 1e-10 * (1 + std::abs(r)));
    }
  }
}
