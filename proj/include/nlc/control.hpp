#pragma once

// Modal forcing interface consumed by the time integrators. eval() fills the
// sine-expansion coefficients of the forcing field at time t; for a control
// supported on omega these are u_k(t) = 2 \int_omega u(t,x) phi_k(x) dx.

#include <algorithm>
#include <span>
#include <stdexcept>
#include <vector>

#include "nlc/spectral.hpp"

namespace nlc {

class ModalForce {
 public:
  virtual ~ModalForce() = default;
  virtual void eval(double t, std::span<double> out) const = 0;
};

class ZeroForce final : public ModalForce {
 public:
  void eval(double, std::span<double> out) const override {
    for (double& v : out) v = 0.0;
  }
};

inline const ModalForce& zero_force() {
  static const ZeroForce z;
  return z;
}

/// Time-sampled modal data on a uniform grid, linearly interpolated.
class SampledModalForce final : public ModalForce {
 public:
  SampledModalForce(std::vector<double> times, std::vector<std::vector<double>> values)
      : times_(std::move(times)), values_(std::move(values)) {
    if (times_.size() < 2 || values_.size() != times_.size())
      throw std::invalid_argument("SampledModalForce: need matching times/values");
    K_ = static_cast<int>(values_.front().size());
    for (const auto& v : values_)
      if (static_cast<int>(v.size()) != K_)
        throw std::invalid_argument("SampledModalForce: ragged value rows");
  }

  int truncation() const { return K_; }

  void eval(double t, std::span<double> out) const override {
    if (static_cast<int>(out.size()) != K_)
      throw std::invalid_argument("SampledModalForce: control truncation mismatch");
    if (t <= times_.front()) {
      for (int k = 0; k < K_; ++k) out[k] = values_.front()[k];
      return;
    }
    if (t >= times_.back()) {
      for (int k = 0; k < K_; ++k) out[k] = values_.back()[k];
      return;
    }
    auto it = std::upper_bound(times_.begin(), times_.end(), t);
    std::size_t i = static_cast<std::size_t>(it - times_.begin());
    double t0 = times_[i - 1], t1 = times_[i];
    double s = (t - t0) / (t1 - t0);
    for (int k = 0; k < K_; ++k)
      out[k] = (1.0 - s) * values_[i - 1][k] + s * values_[i][k];
  }

 private:
  std::vector<double> times_;
  std::vector<std::vector<double>> values_;
  int K_ = 0;
};

}  // namespace nlc
