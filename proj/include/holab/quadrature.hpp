#pragma once

#include <functional>

namespace holab {

struct QuadResult {
    double value = 0.0;
    double error = 0.0; // estimated absolute error
    int panels = 0;     // panels in the final subdivision
    bool converged = false;
};

/// Adaptive Gauss-Kronrod 7-15 integration over [a, b]. Panels are bisected
/// worst-error-first until the summed error estimate satisfies
///   err <= max(abs_tol, rel_tol * |value|)
/// or the panel budget is hit (converged = false in that case).
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double rel_tol = 1e-10, double abs_tol = 0.0,
                     int max_panels = 10000);

/// Variant that throws QuadratureError instead of returning converged=false.
double integrate_or_throw(const std::function<double(double)>& f, double a, double b,
                          double rel_tol = 1e-10, double abs_tol = 0.0,
                          int max_panels = 10000);

} // namespace holab
