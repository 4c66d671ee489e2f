#pragma once

#include <functional>

#include "bergkern/common.hpp"

namespace bergkern {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  long evaluations = 0;
};

using Integrand = std::function<double(double)>;

// Adaptive Gauss-Kronrod (G7,K15) on [a,b] with dyadic subdivision of the
// worst panel. Accepts when the summed error estimate is below
// max(abs_tol, rel_tol * |integral|). Throws AccuracyError (carrying the best
// estimate) if the panel budget runs out first.
QuadratureResult integrate_adaptive(const Integrand& f, double a, double b, double rel_tol,
                                    double abs_tol, int max_panels = 4000);

// Double-exponential (tanh-sinh) rule on (0,b]. Handles integrable power
// singularities at the left endpoint, where Gauss panels stall.
QuadratureResult integrate_tanh_sinh0(const Integrand& f, double b, double rel_tol,
                                      double abs_tol);

}  // namespace bergkern
