#pragma once

// Dirichlet sine eigenbasis on (0,1): eigenpairs, closed-form window
// integrals and transforms between coefficient and sample representations.

#include <cmath>
#include <cstddef>
#include <functional>
#include <numbers>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace nlc {

inline constexpr double kPi = std::numbers::pi;

/// lambda_k = k^2 pi^2, the k-th Dirichlet eigenvalue of -d^2/dx^2 on (0,1).
inline double eigenvalue(int k) {
  if (k < 1) throw std::invalid_argument("eigenvalue: k must be >= 1");
  return double(k) * double(k) * kPi * kPi;
}

/// phi_k(x) = sin(k pi x).
inline double eigenfunction_eval(int k, double x) { return std::sin(k * kPi * x); }

/// m_k = \int_0^1 phi_k = (1 - (-1)^k)/(k pi); vanishes for even k.
inline double mean_mass(int k) {
  if (k < 1) throw std::invalid_argument("mean_mass: k must be >= 1");
  return (k % 2 == 0) ? 0.0 : 2.0 / (k * kPi);
}

// ---------------------------------------------------------------------------
// State and window types
// ---------------------------------------------------------------------------

/// Truncated sine-series coefficient vector; coeffs[k-1] multiplies phi_k.
struct SpectralState {
  std::vector<double> coeffs;

  SpectralState() = default;
  explicit SpectralState(std::vector<double> c) : coeffs(std::move(c)) {}

  int truncation() const { return static_cast<int>(coeffs.size()); }

  /// L2 norm; uses \int_0^1 phi_k^2 = 1/2.
  double l2_norm() const {
    double s = 0.0;
    for (double c : coeffs) s += c * c;
    return std::sqrt(0.5 * s);
  }

  /// Sobolev-weighted coefficient norm (sum (1+lambda_k) c_k^2)^(1/2).
  double h1_norm() const {
    double s = 0.0;
    for (int k = 1; k <= truncation(); ++k) {
      double c = coeffs[k - 1];
      s += (1.0 + eigenvalue(k)) * c * c;
    }
    return std::sqrt(s);
  }

  static SpectralState zero(int K) {
    if (K < 1) throw std::invalid_argument("SpectralState: K must be >= 1");
    return SpectralState(std::vector<double>(K, 0.0));
  }

  /// Unit multiple of phi_k embedded in a K-mode state.
  static SpectralState mode(int k, int K, double amp = 1.0) {
    SpectralState s = zero(K);
    if (k < 1 || k > K) throw std::invalid_argument("SpectralState::mode: k out of range");
    s.coeffs[k - 1] = amp;
    return s;
  }
};

/// L2(0,1) inner product of two states.
inline double l2_pair(const SpectralState& a, const SpectralState& b) {
  std::size_t n = std::min(a.coeffs.size(), b.coeffs.size());
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += a.coeffs[i] * b.coeffs[i];
  return 0.5 * s;
}

inline double pair_l2_norm(const SpectralState& a, const SpectralState& b) {
  double na = a.l2_norm(), nb = b.l2_norm();
  return std::sqrt(na * na + nb * nb);
}

/// Control/observation window: ordered disjoint open intervals in (0,1).
struct Window {
  std::vector<std::pair<double, double>> intervals;

  Window() = default;
  Window(double r1, double r2) : intervals{{r1, r2}} { validate(); }
  explicit Window(std::vector<std::pair<double, double>> iv) : intervals(std::move(iv)) {
    validate();
  }

  void validate() const {
    if (intervals.empty()) throw std::invalid_argument("Window: empty interval list");
    double prev = 0.0;
    for (auto [r1, r2] : intervals) {
      if (!(prev <= r1 && r1 < r2 && r2 < 1.0) || r1 <= 0.0)
        throw std::invalid_argument("Window: intervals must be disjoint, sorted, inside (0,1)");
      prev = r2;
    }
  }

  double measure() const {
    double m = 0.0;
    for (auto [r1, r2] : intervals) m += r2 - r1;
    return m;
  }
};

// ---------------------------------------------------------------------------
// Closed-form trigonometric primitives on an interval [r1, r2].
// The index m may be any integer; m = 0 degenerates to the constant case.
// ---------------------------------------------------------------------------

/// \int_{r1}^{r2} sin(m pi x) dx
inline double int_sin(int m, double r1, double r2) {
  if (m == 0) return 0.0;
  return (std::cos(m * kPi * r1) - std::cos(m * kPi * r2)) / (m * kPi);
}

/// \int_{r1}^{r2} cos(m pi x) dx
inline double int_cos(int m, double r1, double r2) {
  if (m == 0) return r2 - r1;
  return (std::sin(m * kPi * r2) - std::sin(m * kPi * r1)) / (m * kPi);
}

/// \int_{r1}^{r2} x sin(m pi x) dx
inline double int_x_sin(int m, double r1, double r2) {
  if (m == 0) return 0.0;
  double w = m * kPi;
  auto F = [&](double x) { return std::sin(w * x) / (w * w) - x * std::cos(w * x) / w; };
  return F(r2) - F(r1);
}

/// \int_{r1}^{r2} x cos(m pi x) dx
inline double int_x_cos(int m, double r1, double r2) {
  if (m == 0) return 0.5 * (r2 * r2 - r1 * r1);
  double w = m * kPi;
  auto F = [&](double x) { return std::cos(w * x) / (w * w) + x * std::sin(w * x) / w; };
  return F(r2) - F(r1);
}

/// \int_{r1}^{r2} sin(k pi x) sin(l pi x) dx by product-to-sum.
inline double int_sin_sin(int k, int l, double r1, double r2) {
  return 0.5 * (int_cos(k - l, r1, r2) - int_cos(k + l, r1, r2));
}

/// \int_{r1}^{r2} sin(l pi x) cos(k pi x) dx
inline double int_sin_cos(int l, int k, double r1, double r2) {
  return 0.5 * (int_sin(l + k, r1, r2) + int_sin(l - k, r1, r2));
}

/// \int_{r1}^{r2} x sin(l pi x) cos(k pi x) dx
inline double int_x_sin_cos(int l, int k, double r1, double r2) {
  return 0.5 * (int_x_sin(l + k, r1, r2) + int_x_sin(l - k, r1, r2));
}

/// \int_omega sin(k pi x) sin(l pi x) dx summed over window intervals.
inline double overlap_on_window(int k, int l, const Window& w) {
  double s = 0.0;
  for (auto [r1, r2] : w.intervals) s += int_sin_sin(k, l, r1, r2);
  return s;
}

// ---------------------------------------------------------------------------
// Quadrature and transforms
// ---------------------------------------------------------------------------

/// Gauss-Legendre nodes/weights on [-1,1] by Newton iteration on P_n.
inline void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
  x.assign(n, 0.0);
  w.assign(n, 0.0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double t = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = t;
      for (int j = 2; j <= n; ++j) {
        double p2 = ((2 * j - 1) * t * p1 - (j - 1) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (t * p1 - p0) / (t * t - 1.0);
      double dt = p1 / dp;
      t -= dt;
      if (std::abs(dt) < 1e-15) break;
    }
    x[i] = -t;
    x[n - 1 - i] = t;
    w[i] = w[n - 1 - i] = 2.0 / ((1.0 - t * t) * dp * dp);
  }
}

/// Composite Gauss-Legendre grid on [0,1]: `panels` panels, `points` nodes each.
struct QuadratureGrid {
  std::vector<double> nodes;    // all abscissae in (0,1)
  std::vector<double> weights;  // matching quadrature weights

  explicit QuadratureGrid(int panels = 64, int points = 16) {
    std::vector<double> gx, gw;
    gauss_legendre(points, gx, gw);
    double h = 1.0 / panels;
    nodes.reserve(static_cast<std::size_t>(panels) * points);
    weights.reserve(nodes.capacity());
    for (int p = 0; p < panels; ++p) {
      double a = p * h;
      for (int q = 0; q < points; ++q) {
        nodes.push_back(a + 0.5 * h * (gx[q] + 1.0));
        weights.push_back(0.5 * h * gw[q]);
      }
    }
  }

  double integrate(const std::function<double(double)>& f) const {
    double s = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) s += weights[i] * f(nodes[i]);
    return s;
  }
};

inline const QuadratureGrid& default_quadrature() {
  static const QuadratureGrid g(64, 16);
  return g;
}

/// Pointwise synthesis sum_k coeffs_k sin(k pi x) on a grid.
inline std::vector<double> synthesize(const SpectralState& s, std::span<const double> grid) {
  std::vector<double> out(grid.size(), 0.0);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    double x = grid[i], acc = 0.0;
    for (int k = 1; k <= s.truncation(); ++k) acc += s.coeffs[k - 1] * std::sin(k * kPi * x);
    out[i] = acc;
  }
  return out;
}

inline double synthesize_at(const SpectralState& s, double x) {
  double acc = 0.0;
  for (int k = 1; k <= s.truncation(); ++k) acc += s.coeffs[k - 1] * std::sin(k * kPi * x);
  return acc;
}

/// Projection coeffs_k = 2 \int_0^1 f phi_k from samples taken on grid nodes.
inline SpectralState analyze_samples(std::span<const double> samples, int K,
                                     const QuadratureGrid& g = default_quadrature()) {
  if (K < 1) throw std::invalid_argument("analyze: K must be >= 1");
  if (samples.size() != g.nodes.size())
    throw std::invalid_argument("analyze_samples: sample/grid size mismatch");
  SpectralState s = SpectralState::zero(K);
  for (int k = 1; k <= K; ++k) {
    double acc = 0.0;
    for (std::size_t i = 0; i < g.nodes.size(); ++i)
      acc += g.weights[i] * samples[i] * std::sin(k * kPi * g.nodes[i]);
    s.coeffs[k - 1] = 2.0 * acc;
  }
  return s;
}

inline SpectralState analyze(const std::function<double(double)>& f, int K,
                             const QuadratureGrid& g = default_quadrature()) {
  std::vector<double> samples(g.nodes.size());
  for (std::size_t i = 0; i < g.nodes.size(); ++i) samples[i] = f(g.nodes[i]);
  return analyze_samples(samples, K, g);
}

}  // namespace nlc
