#pragma once

#include <functional>

namespace hartogs {

struct QuadratureResult {
    double value = 0.0;
    double abs_error = 0.0;
    long evaluations = 0;
    bool converged = false;
};

// Adaptive bisection with 15-point Gauss-Legendre panels.
// rel_tol is relative to the running integral estimate.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b,
                                    double rel_tol = 1e-12,
                                    long max_evals = 1000000);

}  // namespace hartogs
