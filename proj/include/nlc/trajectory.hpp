#pragma once

// Time-sampled spectral trajectory of a two-field parabolic system plus the
// elliptically-derived third field, with export and energy diagnostics.

#include <cmath>
#include <filesystem>
#include <string>
#include <vector>

#include "nlc/io.hpp"
#include "nlc/spectral.hpp"

namespace nlc {

struct Trajectory {
  std::vector<double> times;          // ascending, includes both endpoints
  std::vector<SpectralState> y;       // phi for adjoint runs
  std::vector<SpectralState> z;       // psi for adjoint runs
  std::vector<SpectralState> w;       // theta for adjoint runs; may be empty
  bool adjoint = false;

  int truncation() const { return y.empty() ? 0 : y.front().truncation(); }
  std::size_t samples() const { return times.size(); }

  const SpectralState& terminal_y() const { return y.back(); }
  const SpectralState& terminal_z() const { return z.back(); }

  double terminal_pair_norm() const { return pair_l2_norm(y.back(), z.back()); }
};

struct EnergyReport {
  std::vector<double> t;
  std::vector<double> norm_y, norm_z, norm_w;
  double fitted_growth_rate = 0.0;  // max_t log(||state(t)||/||state(0)||)/t, clipped at 0
  bool nonincreasing = true;
  double terminal_y = 0.0, terminal_z = 0.0, terminal_w = 0.0;
};

/// L2 norm time series and a fitted exponential growth-rate diagnostic.
inline EnergyReport energy_report(const Trajectory& traj) {
  EnergyReport r;
  r.t = traj.times;
  double prev = -1.0;
  for (std::size_t i = 0; i < traj.samples(); ++i) {
    double ny = traj.y[i].l2_norm();
    double nz = traj.z[i].l2_norm();
    double nw = i < traj.w.size() ? traj.w[i].l2_norm() : 0.0;
    r.norm_y.push_back(ny);
    r.norm_z.push_back(nz);
    r.norm_w.push_back(nw);
    double tot = std::sqrt(ny * ny + nz * nz);
    if (prev >= 0.0 && tot > prev * (1.0 + 1e-12) + 1e-300) r.nonincreasing = false;
    prev = tot;
  }
  double n0 = std::sqrt(r.norm_y[0] * r.norm_y[0] + r.norm_z[0] * r.norm_z[0]);
  if (n0 > 0.0) {
    for (std::size_t i = 1; i < r.t.size(); ++i) {
      double nt = std::sqrt(r.norm_y[i] * r.norm_y[i] + r.norm_z[i] * r.norm_z[i]);
      if (nt > 0.0 && r.t[i] > 0.0)
        r.fitted_growth_rate = std::max(r.fitted_growth_rate, std::log(nt / n0) / r.t[i]);
    }
  }
  r.terminal_y = r.norm_y.back();
  r.terminal_z = r.norm_z.back();
  r.terminal_w = r.norm_w.back();
  return r;
}

/// CSV columns (t, field, mode, coeff).
inline void export_trajectory_csv(const Trajectory& traj, const std::filesystem::path& path) {
  CsvWriter csv(path, {"t", "field", "mode", "coeff"});
  const char* fy = traj.adjoint ? "phi" : "y";
  const char* fz = traj.adjoint ? "psi" : "z";
  const char* fw = traj.adjoint ? "theta" : "w";
  for (std::size_t i = 0; i < traj.samples(); ++i) {
    auto dump = [&](const char* name, const SpectralState& s) {
      for (int k = 1; k <= s.truncation(); ++k)
        csv.row({fmt_g17(traj.times[i]), name, std::to_string(k), fmt_g17(s.coeffs[k - 1])});
    };
    dump(fy, traj.y[i]);
    dump(fz, traj.z[i]);
    if (i < traj.w.size()) dump(fw, traj.w[i]);
  }
}

inline json energy_report_json(const EnergyReport& r) {
  return json{{"terminal_norms", {{"y", r.terminal_y}, {"z", r.terminal_z}, {"w", r.terminal_w}}},
              {"fitted_growth_rate", r.fitted_growth_rate},
              {"nonincreasing", r.nonincreasing}};
}

}  // namespace nlc
