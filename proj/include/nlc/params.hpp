#pragma once

// Scalar coefficients of the coupled parabolic-elliptic model and the
// control window. beta1/beta2 are the constant-in-time specialization of the
// L-infinity nonlinearity coefficients.

#include <stdexcept>

#include "nlc/spectral.hpp"

namespace nlc {

struct SystemParams {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
  double kappa = 1.0;
  double chi1 = 0.0;
  double chi2 = 0.0;
  double beta1 = 0.0;
  double beta2 = 0.0;
  Window omega{0.25, 0.75};

  void validate() const {
    if (!(kappa > 0.0)) throw std::invalid_argument("SystemParams: kappa must be positive");
    if (chi1 < 0.0 || chi2 < 0.0)
      throw std::invalid_argument("SystemParams: chemotactic sensitivities must be >= 0");
    omega.validate();
  }
};

}  // namespace nlc
