#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <functional>

#include "nlc/exp_kernels.hpp"
#include "nlc/spectral.hpp"

using namespace nlc;
using Catch::Approx;

namespace {

// Romberg-style refinement of the trapezoid rule as an independent oracle.
double quad_oracle(const std::function<double(double)>& f, double a, double b) {
  const int n = 1 << 16;
  double h = (b - a) / n;
  double s = 0.5 * (f(a) + f(b));
  for (int i = 1; i < n; ++i) s += f(a + i * h);
  return s * h;
}

}  // namespace

TEST_CASE("exp_moment closed forms") {
  // E_0 = (1 - e^{-mu T})/mu
  double mu = 2.0 * kPi * kPi;
  CHECK(exp_moment(0, mu, 1.0) == Approx((1.0 - std::exp(-mu)) / mu).epsilon(1e-14));
  // E_1 = (1 - e^{-mu T}(1 + mu T))/mu^2
  CHECK(exp_moment(1, mu, 1.0) ==
        Approx((1.0 - std::exp(-mu) * (1.0 + mu)) / (mu * mu)).epsilon(1e-14));

  for (double m : {1e-8, 0.1, 3.0, 15.0, 300.0, 2500.0})
    for (int n : {0, 1, 2}) {
      double oracle = quad_oracle([&](double s) { return std::pow(s, n) * std::exp(-m * s); },
                                  0.0, 1.0);
      CHECK(exp_moment(n, m, 1.0) == Approx(oracle).epsilon(1e-7).margin(1e-14));
    }

  // mu -> 0 limit is the polynomial moment
  CHECK(exp_moment(2, 0.0, 2.0) == Approx(8.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("exp_moment in extended precision matches double range") {
  __float128 v = exp_moment<__float128>(1, __float128(20.0), __float128(1.0));
  double d = exp_moment(1, 20.0, 1.0);
  CHECK(double(v) == Approx(d).epsilon(1e-12));
}

TEST_CASE("psi_poly series and recurrence regimes agree") {
  for (int n = 0; n < 4; ++n) {
    for (double mu : {0.0, 1e-6, 0.5, 7.9, 8.1, 40.0, 1000.0}) {
      double oracle =
          quad_oracle([&](double s) { return std::pow(s, n) * std::exp(-mu * (1.0 - s)); }, 0.0,
                      1.0);
      CHECK(psi_poly(n, mu) == Approx(oracle).epsilon(1e-7).margin(1e-12));
    }
    // continuity across the regime switch
    CHECK(psi_poly(n, 8.0 - 1e-9) == Approx(psi_poly(n, 8.0 + 1e-9)).epsilon(1e-7));
  }
  CHECK(psi_poly(0, 0.0) == Approx(1.0));
  CHECK(psi_poly(3, 0.0) == Approx(0.25));
}

TEST_CASE("duhamel weights integrate cubics exactly and handle stiffness") {
  const auto& g = gl4();
  // non-stiff limit: plain Gauss-Legendre weights
  auto w0 = duhamel_weights(0.0, 1.0);
  double sum = w0[0] + w0[1] + w0[2] + w0[3];
  CHECK(sum == Approx(1.0).epsilon(1e-14));

  for (double alpha : {0.0, 1.0, 50.0, 4000.0}) {
    double D = 0.01;
    auto w = duhamel_weights(alpha, D);
    for (int deg = 0; deg < 4; ++deg) {
      double approx_int = 0.0;
      for (int q = 0; q < 4; ++q) approx_int += w[q] * std::pow(g.node[q] * D, deg);
      double exact = exp_moment(deg, alpha, D);
      // \int_0^D e^{-a(D-s)} s^deg ds = e^{-aD} \int s^deg e^{a s} -- use identity
      // via substitution s -> D - s: = \int_0^D (D-u)^deg e^{-a u} du
      double check = 0.0;
      {
        // binomial expansion against exp_moment
        double binom = 1.0;
        for (int r = 0; r <= deg; ++r) {
          double term = binom * std::pow(D, deg - r) * (r % 2 ? -1.0 : 1.0) *
                        exp_moment(r, alpha, D);
          check += term;
          binom = binom * (deg - r) / (r + 1.0);
        }
      }
      (void)exact;
      CHECK(approx_int == Approx(check).epsilon(1e-12).margin(1e-18));
    }
  }
}
