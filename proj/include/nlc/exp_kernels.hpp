#pragma once

// Closed-form exponential-moment primitives shared by the time integrators
// and the biorthogonal machinery:
//   exp_moment(n, mu, T)  = \int_0^T s^n e^{-mu s} ds
//   psi_poly(n, mu)       = \int_0^1 sigma^n e^{-mu (1-sigma)} dsigma
// plus the 4-node Gauss-Legendre Duhamel weights
//   W_q such that \int_0^D e^{-alpha (D-s)} f(s) ds ~ sum_q W_q f(x_q D),
// exact for cubic f and any alpha >= 0 (stiff-uniform).

#include <array>
#include <cmath>
#include <stdexcept>

#if defined(__GNUC__) && defined(__x86_64__)
#include <quadmath.h>
#endif

namespace nlc {

namespace detail {

template <class T>
T exp_of(T x) {
  return std::exp(x);
}

#if defined(__GNUC__) && defined(__x86_64__)
template <>
inline __float128 exp_of<__float128>(__float128 x) {
  return expq(x);
}
#endif

template <class T>
constexpr int series_headroom() {
  // cancellation budget of the alternating series; quad has more digits
  return sizeof(T) > 8 ? 20 : 10;
}

}  // namespace detail

/// \int_0^T s^n e^{-mu s} ds, stable for tiny and huge mu*T. mu > 0 assumed
/// except that mu = 0 falls back to the polynomial value T^{n+1}/(n+1).
template <class T>
T exp_moment(int n, T mu, T horizon) {
  if (n < 0) throw std::invalid_argument("exp_moment: n < 0");
  const T mt = mu * horizon;
  if (mt < T(0)) throw std::invalid_argument("exp_moment: mu*T < 0");
  if (mt <= T(detail::series_headroom<T>())) {
    // T^{n+1} sum_m (-mu T)^m / (m! (n+m+1))
    const T tol = sizeof(T) > 8 ? T(1e-40) : T(1e-18);
    T term = T(1), sum = T(1) / T(n + 1);
    for (int m = 1; m < 500; ++m) {
      term *= -mt / T(m);
      T add = term / T(n + m + 1);
      sum += add;
      T mag = add < T(0) ? -add : add;
      T smag = sum < T(0) ? -sum : sum;
      if (mag <= smag * tol) break;
    }
    T p = horizon;
    for (int i = 0; i < n; ++i) p *= horizon;
    return p * sum;
  }
  // upward recurrence E_n = (n E_{n-1} - T^n e^{-mu T}) / mu, benign when
  // e^{-mu T} is negligible against E_0 ~ 1/mu
  const T emt = detail::exp_of(-mt);
  T e = (T(1) - emt) / mu;
  T tp = T(1);
  for (int i = 1; i <= n; ++i) {
    tp *= horizon;
    e = (T(i) * e - tp * emt) / mu;
  }
  return e;
}

/// psi_n(mu) = \int_0^1 sigma^n e^{-mu(1-sigma)} dsigma for n in [0,3].
inline double psi_poly(int n, double mu) {
  if (n < 0 || mu < 0.0) throw std::invalid_argument("psi_poly: bad arguments");
  if (mu <= 8.0) {
    // n! sum_m (-mu)^m / (n+m+1)!; term ratio is -mu/(n+m+1)
    double term = 1.0 / (n + 1.0), sum = term;
    for (int m = 1; m < 200; ++m) {
      term *= -mu / (n + m + 1.0);
      sum += term;
      if (std::abs(term) < 1e-19 * std::abs(sum) + 1e-300) break;
    }
    return sum;
  }
  double e = (1.0 - std::exp(-mu)) / mu;  // psi_0
  for (int i = 1; i <= n; ++i) e = (1.0 - i * e) / mu;
  return e;
}

// ---------------------------------------------------------------------------
// Gauss-Legendre-4 exponential Duhamel quadrature
// ---------------------------------------------------------------------------

struct Gl4 {
  std::array<double, 4> node;            // abscissae on (0,1)
  std::array<std::array<double, 4>, 4> lag;  // lag[q][n]: ell_q(s)=sum_n lag[q][n] s^n

  Gl4() {
    const double s6 = std::sqrt(6.0 / 5.0);
    const double a = std::sqrt((3.0 - 2.0 * s6) / 7.0);
    const double b = std::sqrt((3.0 + 2.0 * s6) / 7.0);
    node = {0.5 * (1.0 - b), 0.5 * (1.0 - a), 0.5 * (1.0 + a), 0.5 * (1.0 + b)};
    for (int q = 0; q < 4; ++q) {
      // expand prod_{r!=q} (s - x_r)/(x_q - x_r)
      std::array<double, 4> poly{1.0, 0.0, 0.0, 0.0};
      int deg = 0;
      double denom = 1.0;
      for (int r = 0; r < 4; ++r) {
        if (r == q) continue;
        denom *= node[q] - node[r];
        for (int n = deg + 1; n >= 1; --n) poly[n] = poly[n - 1] - node[r] * poly[n];
        poly[0] *= -node[r];
        ++deg;
      }
      for (int n = 0; n < 4; ++n) lag[q][n] = poly[n] / denom;
    }
  }
};

inline const Gl4& gl4() {
  static const Gl4 g;
  return g;
}

/// Weights W_q for \int_0^D e^{-alpha(D-s)} f(s) ds ~ sum_q W_q f(x_q D).
inline std::array<double, 4> duhamel_weights(double alpha, double interval) {
  const Gl4& g = gl4();
  const double mu = alpha * interval;
  std::array<double, 4> psi{};
  for (int n = 0; n < 4; ++n) psi[n] = psi_poly(n, mu);
  std::array<double, 4> w{};
  for (int q = 0; q < 4; ++q) {
    double acc = 0.0;
    for (int n = 0; n < 4; ++n) acc += g.lag[q][n] * psi[n];
    w[q] = interval * acc;
  }
  return w;
}

}  // namespace nlc
