#pragma once

// Exact-in-space spectral ODE integration of the simplified system, the
// linearized parabolic-elliptic system, and its adjoint.
//
// The modal structure is driver/driven: one field satisfies a diagonal
// equation p_k' + alpha_k p_k = P_k(t); the other is forced by it,
//   r_k' + beta_k r_k = c1_k p_k(t) + c2 m_k sum_j m_j p_j(t) + R_k(t).
// Each step propagates the diagonal part exactly and integrates forcing with
// the 4-node Gauss-Legendre Duhamel quadrature (stiff-uniform, order 4).
// Driver values at the quadrature nodes are produced by nested Duhamel
// evaluation from the step's left boundary, so no interpolation enters.

#include <array>
#include <cmath>
#include <memory>
#include <stdexcept>
#include <vector>

#include "nlc/control.hpp"
#include "nlc/exp_kernels.hpp"
#include "nlc/params.hpp"
#include "nlc/spectral.hpp"
#include "nlc/trajectory.hpp"

namespace nlc {

/// Mode-wise solve of -w_xx + kappa w = d1 y + d2 z.
inline SpectralState elliptic_solve(double kappa, double d1, double d2,
                                    const SpectralState& y, const SpectralState& z) {
  if (y.truncation() != z.truncation())
    throw std::invalid_argument("elliptic_solve: truncation mismatch");
  SpectralState w = SpectralState::zero(y.truncation());
  for (int k = 1; k <= y.truncation(); ++k)
    w.coeffs[k - 1] = (d1 * y.coeffs[k - 1] + d2 * z.coeffs[k - 1]) / (eigenvalue(k) + kappa);
  return w;
}

/// Sum of forcing terms (control plus sources, say).
class SumForce final : public ModalForce {
 public:
  explicit SumForce(std::vector<const ModalForce*> parts) : parts_(std::move(parts)) {}
  void eval(double t, std::span<double> out) const override {
    for (double& v : out) v = 0.0;
    std::vector<double> tmp(out.size());
    for (const ModalForce* f : parts_) {
      if (!f) continue;
      f->eval(t, tmp);
      for (std::size_t i = 0; i < out.size(); ++i) out[i] += tmp[i];
    }
  }

 private:
  std::vector<const ModalForce*> parts_;
};

namespace detail {

struct ModeWeights {
  double decay_h;
  std::array<double, 4> decay_node;                 // e^{-alpha x_q h}
  std::array<double, 4> w_main;                     // nodes scaled by h
  std::array<std::array<double, 4>, 4> w_inner;     // [q][r] on interval x_q h
};

inline std::vector<ModeWeights> build_weights(const std::vector<double>& rates, double h,
                                              bool with_inner) {
  const Gl4& g = gl4();
  std::vector<ModeWeights> out(rates.size());
  for (std::size_t k = 0; k < rates.size(); ++k) {
    ModeWeights& m = out[k];
    double a = rates[k];
    m.decay_h = std::exp(-a * h);
    m.w_main = duhamel_weights(a, h);
    for (int q = 0; q < 4; ++q) {
      m.decay_node[q] = std::exp(-a * g.node[q] * h);
      if (with_inner) m.w_inner[q] = duhamel_weights(a, g.node[q] * h);
    }
  }
  return out;
}

}  // namespace detail

struct DriveSpec {
  std::vector<double> alpha;  // driver decay rates
  std::vector<double> beta;   // driven decay rates
  std::vector<double> c1;     // per-mode driver->driven coupling
  double c2 = 0.0;            // nonlocal coupling scale, enters as c2 m_k sum_j m_j p_j
  const ModalForce* driver_force = nullptr;
  const ModalForce* driven_force = nullptr;
};

/// Uniform-grid integration; returns boundary states of (p, r).
inline std::pair<std::vector<SpectralState>, std::vector<SpectralState>> run_driver_driven(
    const DriveSpec& spec, const SpectralState& p0, const SpectralState& r0, double T,
    int steps) {
  const int K = p0.truncation();
  if (steps < 1) throw std::invalid_argument("run_driver_driven: steps must be >= 1");
  if (r0.truncation() != K || static_cast<int>(spec.alpha.size()) != K ||
      static_cast<int>(spec.beta.size()) != K || static_cast<int>(spec.c1.size()) != K)
    throw std::invalid_argument("run_driver_driven: truncation mismatch");
  const double h = T / steps;
  const Gl4& g = gl4();

  auto wp = detail::build_weights(spec.alpha, h, true);
  auto wr = detail::build_weights(spec.beta, h, false);

  std::vector<double> mass(K);
  for (int k = 1; k <= K; ++k) mass[k - 1] = mean_mass(k);

  std::vector<SpectralState> P{p0}, R{r0};
  P.reserve(steps + 1);
  R.reserve(steps + 1);

  std::vector<double> p = p0.coeffs, r = r0.coeffs;
  std::vector<double> fbuf(K);
  // driver forcing at the 4 main nodes and the 4x4 nested nodes
  std::array<std::vector<double>, 4> f_main;
  std::array<std::array<std::vector<double>, 4>, 4> f_nest;
  std::array<std::vector<double>, 4> p_node;   // driver at main nodes
  std::array<std::vector<double>, 4> f_driven; // driven forcing at main nodes
  for (int q = 0; q < 4; ++q) {
    f_main[q].assign(K, 0.0);
    p_node[q].assign(K, 0.0);
    f_driven[q].assign(K, 0.0);
    for (int rr = 0; rr < 4; ++rr) f_nest[q][rr].assign(K, 0.0);
  }

  for (int n = 0; n < steps; ++n) {
    const double tL = n * h;
    if (spec.driver_force) {
      for (int q = 0; q < 4; ++q) {
        spec.driver_force->eval(tL + g.node[q] * h, f_main[q]);
        for (int rr = 0; rr < 4; ++rr)
          spec.driver_force->eval(tL + g.node[q] * h * g.node[rr], f_nest[q][rr]);
      }
    } else {
      for (int q = 0; q < 4; ++q) {
        std::fill(f_main[q].begin(), f_main[q].end(), 0.0);
        for (int rr = 0; rr < 4; ++rr)
          std::fill(f_nest[q][rr].begin(), f_nest[q][rr].end(), 0.0);
      }
    }

    // driver at the main nodes via nested Duhamel from tL
    for (int q = 0; q < 4; ++q)
      for (int k = 0; k < K; ++k) {
        double acc = wp[k].decay_node[q] * p[k];
        for (int rr = 0; rr < 4; ++rr) acc += wp[k].w_inner[q][rr] * f_nest[q][rr][k];
        p_node[q][k] = acc;
      }

    // driven forcing at the main nodes
    for (int q = 0; q < 4; ++q) {
      if (spec.driven_force)
        spec.driven_force->eval(tL + g.node[q] * h, f_driven[q]);
      else
        std::fill(f_driven[q].begin(), f_driven[q].end(), 0.0);
      double nonlocal = 0.0;
      for (int k = 0; k < K; ++k) nonlocal += mass[k] * p_node[q][k];
      for (int k = 0; k < K; ++k)
        f_driven[q][k] += spec.c1[k] * p_node[q][k] + spec.c2 * mass[k] * nonlocal;
    }

    for (int k = 0; k < K; ++k) {
      double pn = wp[k].decay_h * p[k];
      double rn = wr[k].decay_h * r[k];
      for (int q = 0; q < 4; ++q) {
        pn += wp[k].w_main[q] * f_main[q][k];
        rn += wr[k].w_main[q] * f_driven[q][k];
      }
      p[k] = pn;
      r[k] = rn;
    }
    P.emplace_back(p);
    R.emplace_back(r);
  }
  return {std::move(P), std::move(R)};
}

namespace detail {

inline std::vector<double> heat_rates(int K) {
  std::vector<double> a(K);
  for (int k = 1; k <= K; ++k) a[k - 1] = eigenvalue(k);
  return a;
}

/// z-equation decay rates: lambda_k - c d2/(lambda_k + kappa).
inline std::vector<double> driven_rates(const SystemParams& p, int K) {
  std::vector<double> b(K);
  for (int k = 1; k <= K; ++k) b[k - 1] = eigenvalue(k) - p.c * p.d2 / (eigenvalue(k) + p.kappa);
  return b;
}

/// y->z coupling a + c d1/(lambda_k + kappa).
inline std::vector<double> coupling_c1(const SystemParams& p, int K) {
  std::vector<double> c(K);
  for (int k = 1; k <= K; ++k) c[k - 1] = p.a + p.c * p.d1 / (eigenvalue(k) + p.kappa);
  return c;
}

inline std::vector<double> uniform_times(double T, int steps) {
  std::vector<double> t(steps + 1);
  for (int i = 0; i <= steps; ++i) t[i] = T * i / steps;
  return t;
}

}  // namespace detail

/// y_t - y_xx = u 1_omega, z_t - z_xx = a y + b \int y; no elliptic field.
inline Trajectory simulate_simplified(const SystemParams& params, const SpectralState& y0,
                                      const SpectralState& z0, const ModalForce& u, double T,
                                      int steps) {
  const int K = y0.truncation();
  DriveSpec spec;
  spec.alpha = detail::heat_rates(K);
  spec.beta = detail::heat_rates(K);
  spec.c1.assign(K, params.a);
  spec.c2 = 2.0 * params.b;
  spec.driver_force = &u;
  auto [Y, Z] = run_driver_driven(spec, y0, z0, T, steps);
  Trajectory traj;
  traj.times = detail::uniform_times(T, steps);
  traj.y = std::move(Y);
  traj.z = std::move(Z);
  return traj;
}

/// Linearized system with optional extra sources S1, S2 in the two equations.
inline Trajectory simulate_linearized_forced(const SystemParams& params, const SpectralState& y0,
                                             const SpectralState& z0, const ModalForce& u,
                                             const ModalForce& v, const ModalForce* S1,
                                             const ModalForce* S2, double T, int steps) {
  params.validate();
  const int K = y0.truncation();
  DriveSpec spec;
  spec.alpha = detail::heat_rates(K);
  spec.beta = detail::driven_rates(params, K);
  spec.c1 = detail::coupling_c1(params, K);
  spec.c2 = 2.0 * params.b;
  SumForce fy({&u, S1});
  SumForce fz({&v, S2});
  spec.driver_force = &fy;
  spec.driven_force = &fz;
  auto [Y, Z] = run_driver_driven(spec, y0, z0, T, steps);
  Trajectory traj;
  traj.times = detail::uniform_times(T, steps);
  traj.y = std::move(Y);
  traj.z = std::move(Z);
  traj.w.reserve(traj.y.size());
  for (std::size_t i = 0; i < traj.y.size(); ++i)
    traj.w.push_back(elliptic_solve(params.kappa, params.d1, params.d2, traj.y[i], traj.z[i]));
  return traj;
}

inline Trajectory simulate_linearized(const SystemParams& params, const SpectralState& y0,
                                      const SpectralState& z0, const ModalForce& u,
                                      const ModalForce& v, double T, int steps) {
  return simulate_linearized_forced(params, y0, z0, u, v, nullptr, nullptr, T, steps);
}

/// Backward adjoint solve; the returned trajectory lives on the forward time
/// grid with phi in the y slot, psi in the z slot and theta in the w slot.
inline Trajectory solve_adjoint(const SystemParams& params, const SpectralState& phiT,
                                const SpectralState& psiT, double T, int steps) {
  params.validate();
  const int K = phiT.truncation();
  DriveSpec spec;
  spec.alpha = detail::driven_rates(params, K);  // psi decays with the z-equation rate
  spec.beta = detail::heat_rates(K);
  spec.c1 = detail::coupling_c1(params, K);
  spec.c2 = 2.0 * params.b;
  auto [Psi, Phi] = run_driver_driven(spec, psiT, phiT, T, steps);
  Trajectory traj;
  traj.adjoint = true;
  traj.times = detail::uniform_times(T, steps);
  traj.y.resize(steps + 1);
  traj.z.resize(steps + 1);
  traj.w.reserve(steps + 1);
  for (int i = 0; i <= steps; ++i) {
    traj.y[i] = Phi[steps - i];
    traj.z[i] = Psi[steps - i];
  }
  for (int i = 0; i <= steps; ++i) {
    SpectralState th = SpectralState::zero(K);
    for (int k = 1; k <= K; ++k)
      th.coeffs[k - 1] = params.c * traj.z[i].coeffs[k - 1] / (eigenvalue(k) + params.kappa);
    traj.w.push_back(std::move(th));
  }
  return traj;
}

/// Evaluate an adjoint trajectory at an arbitrary time. psi follows its exact
/// diagonal decay from the nearest stored right boundary; phi is reconstructed
/// with one Duhamel quadrature over [t, t_right], consistent with the solver.
inline void adjoint_eval(const SystemParams& params, const Trajectory& traj, double t,
                         std::span<double> phi_out, std::span<double> psi_out) {
  if (!traj.adjoint) throw std::invalid_argument("adjoint_eval: not an adjoint trajectory");
  const int K = traj.truncation();
  if (static_cast<int>(phi_out.size()) != K || static_cast<int>(psi_out.size()) != K)
    throw std::invalid_argument("adjoint_eval: truncation mismatch");
  const auto& times = traj.times;
  const double T = times.back();
  double tc = std::min(std::max(t, times.front()), T);
  // locate stored right boundary
  std::size_t hi = std::upper_bound(times.begin(), times.end(), tc) - times.begin();
  if (hi >= times.size()) hi = times.size() - 1;
  if (hi == 0) hi = 1;
  const double tr = times[hi];
  const double dt = tr - tc;  // backward-time distance from the stored state
  const auto& phiR = traj.y[hi];
  const auto& psiR = traj.z[hi];

  auto apsi = detail::driven_rates(params, K);
  auto c1 = detail::coupling_c1(params, K);
  const double c2 = 2.0 * params.b;

  for (int k = 0; k < K; ++k) psi_out[k] = std::exp(-apsi[k] * dt) * psiR.coeffs[k];
  if (dt == 0.0) {
    for (int k = 0; k < K; ++k) phi_out[k] = phiR.coeffs[k];
    return;
  }
  const Gl4& g = gl4();
  // psi at the quadrature nodes of [0, dt] in backward time
  std::array<std::vector<double>, 4> psi_node;
  std::array<double, 4> nonlocal{};
  for (int q = 0; q < 4; ++q) {
    psi_node[q].assign(K, 0.0);
    double acc = 0.0;
    for (int k = 0; k < K; ++k) {
      double v = std::exp(-apsi[k] * g.node[q] * dt) * psiR.coeffs[k];
      psi_node[q][k] = v;
      acc += mean_mass(k + 1) * v;
    }
    nonlocal[q] = acc;
  }
  for (int k = 0; k < K; ++k) {
    double lam = eigenvalue(k + 1);
    auto w = duhamel_weights(lam, dt);
    double acc = std::exp(-lam * dt) * phiR.coeffs[k];
    for (int q = 0; q < 4; ++q)
      acc += w[q] * (c1[k] * psi_node[q][k] + c2 * mean_mass(k + 1) * nonlocal[q]);
    phi_out[k] = acc;
  }
}

}  // namespace nlc
