#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "nlc/spectral.hpp"

using namespace nlc;
using Catch::Approx;

TEST_CASE("eigenvalues of the Dirichlet Laplacian") {
  CHECK(eigenvalue(1) == Approx(9.8696044010893586).epsilon(1e-14));
  CHECK(eigenvalue(3) == Approx(9.0 * kPi * kPi).epsilon(1e-15));
  CHECK(eigenvalue(2) == Approx(4.0 * eigenvalue(1)).epsilon(1e-15));
}

TEST_CASE("eigenfunction point values and boundary conditions") {
  CHECK(eigenfunction_eval(1, 0.5) == Approx(1.0));
  CHECK(eigenfunction_eval(2, 0.5) == Approx(0.0).margin(1e-15));
  CHECK(eigenfunction_eval(3, 1.0) == Approx(0.0).margin(1e-12));
  CHECK(eigenfunction_eval(5, 0.0) == Approx(0.0).margin(1e-15));
}

TEST_CASE("mean mass of modes") {
  CHECK(mean_mass(1) == Approx(2.0 / kPi).epsilon(1e-15));
  CHECK(mean_mass(3) == Approx(2.0 / (3.0 * kPi)).epsilon(1e-15));
  for (int k = 1; k <= 32; ++k) CHECK(mean_mass(2 * k) == 0.0);
}

TEST_CASE("window overlaps against closed forms and quadrature") {
  Window full(1e-12, 1.0 - 1e-12);  // effectively (0,1)
  Window w1(0.25, 0.75);

  CHECK(overlap_on_window(3, 3, Window(0.001, 0.999)) ==
        Approx(int_sin_sin(3, 3, 0.001, 0.999)).epsilon(1e-15));
  // full-interval orthonormality (exact closed forms on (0,1))
  for (int k = 1; k <= 64; ++k)
    for (int l = k; l <= 64; l += 7) {
      double v = int_sin_sin(k, l, 0.0, 1.0);
      if (k == l)
        CHECK(v == Approx(0.5).margin(1e-13));
      else
        CHECK(v == Approx(0.0).margin(1e-13));
    }
  CHECK(overlap_on_window(2, 2, w1) == Approx(0.25).margin(1e-15));

  // quadrature oracle for a generic window and cross mode
  Window wg(0.3, 0.8);
  const auto& q = default_quadrature();
  for (auto [k, l] : {std::pair{1, 2}, {3, 5}, {4, 4}, {7, 2}}) {
    double oracle = q.integrate([&](double x) {
      return (x > 0.3 && x < 0.8) ? std::sin(k * kPi * x) * std::sin(l * kPi * x) : 0.0;
    });
    CHECK(overlap_on_window(k, l, wg) == Approx(oracle).margin(5e-10));
  }

  // additivity over a partition of (0,1)
  for (auto [k, l] : {std::pair{1, 1}, {2, 5}, {6, 6}}) {
    double parts = overlap_on_window(k, l, Window(1e-14, 0.3)) +
                   overlap_on_window(k, l, Window(0.3, 0.7)) +
                   overlap_on_window(k, l, Window(0.7, 1.0 - 1e-14));
    CHECK(parts == Approx(int_sin_sin(k, l, 0.0, 1.0)).margin(1e-12));
  }
}

TEST_CASE("synthesize point evaluation") {
  SpectralState s1(std::vector<double>{1.0});
  CHECK(synthesize_at(s1, 0.5) == Approx(1.0));
  SpectralState s0 = SpectralState::zero(8);
  CHECK(synthesize_at(s0, 0.37) == 0.0);
  SpectralState s2(std::vector<double>{1.0, 1.0});
  CHECK(synthesize_at(s2, 0.25) == Approx(std::sin(kPi / 4) + std::sin(kPi / 2)).epsilon(1e-15));
  CHECK(synthesize_at(s2, 0.25) == Approx(1.70710678118654752).epsilon(1e-12));
}

TEST_CASE("analyze recovers band-limited inputs") {
  auto s = analyze([](double x) { return std::sin(2 * kPi * x); }, 4);
  CHECK(s.coeffs[0] == Approx(0.0).margin(1e-12));
  CHECK(s.coeffs[1] == Approx(1.0).epsilon(1e-12));
  CHECK(s.coeffs[2] == Approx(0.0).margin(1e-12));
  CHECK(s.coeffs[3] == Approx(0.0).margin(1e-12));

  auto z = analyze([](double) { return 0.0; }, 3);
  for (double c : z.coeffs) CHECK(c == 0.0);

  // f = x(1-x): analytic sine coefficients 8/(k pi)^3 for odd k
  auto p = analyze([](double x) { return x * (1.0 - x); }, 3);
  CHECK(p.coeffs[0] == Approx(8.0 / (kPi * kPi * kPi)).epsilon(1e-12));
  CHECK(p.coeffs[0] == Approx(0.25801227546559).epsilon(1e-10));
  CHECK(p.coeffs[1] == Approx(0.0).margin(1e-12));
}

TEST_CASE("analyze/synthesize round trip at K = 64") {
  std::mt19937_64 rng(42);
  std::normal_distribution<double> N(0.0, 1.0);
  SpectralState s = SpectralState::zero(64);
  for (auto& c : s.coeffs) c = N(rng);
  auto back = analyze([&](double x) { return synthesize_at(s, x); }, 64);
  for (int k = 0; k < 64; ++k) CHECK(back.coeffs[k] == Approx(s.coeffs[k]).margin(1e-10));
}

TEST_CASE("state norms") {
  SpectralState s = SpectralState::mode(2, 4, 3.0);
  CHECK(s.l2_norm() == Approx(3.0 * std::sqrt(0.5)).epsilon(1e-15));
  CHECK(s.h1_norm() == Approx(3.0 * std::sqrt(1.0 + eigenvalue(2))).epsilon(1e-15));
  CHECK(l2_pair(s, s) == Approx(4.5).epsilon(1e-15));
}

TEST_CASE("window validation") {
  CHECK_THROWS(Window(0.5, 0.4));
  CHECK_THROWS(Window(0.0, 0.4));
  CHECK_THROWS(Window(0.3, 1.0));
  CHECK_THROWS(Window(std::vector<std::pair<double, double>>{{0.1, 0.5}, {0.4, 0.8}}));
  CHECK_NOTHROW(Window(std::vector<std::pair<double, double>>{{0.1, 0.3}, {0.5, 0.8}}));
}
