#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "holab/scalar_function.hpp"

namespace holab {

/// Controls classification of improper integrals over [R_start, +inf).
struct TailProbe {
    double r_start = 1.0;
    int window_doublings = 8;
    double quad_tol = 1e-10; // relative tolerance per window

    void validate() const {
        if (!(r_start > 0.0)) throw DomainError("probe start must be positive");
        if (window_doublings < 4) throw DomainError("probe needs at least 4 doubling windows");
    }
};

enum class Convergence { Convergent, Divergent, Inconclusive };

/// Outcome of a numerical convergence test. `value` is present only for
/// Convergent (partial sum plus a geometric tail extrapolation); the window
/// integrals and fitted decay are kept as evidence.
struct ConvergenceVerdict {
    Convergence status = Convergence::Inconclusive;
    std::optional<double> value;
    std::optional<double> error;
    std::vector<double> window_integrals; // over [r0 2^k, r0 2^{k+1}]
    std::vector<double> partial_sums;
    std::optional<double> fitted_ratio;    // geometric window ratio
    std::optional<double> fitted_exponent; // power-law exponent p with f ~ R^{-p}
    std::string diagnostic;

    bool convergent() const { return status == Convergence::Convergent; }
    bool divergent() const { return status == Convergence::Divergent; }
};

/// Classifies the improper integral of a positive continuous integrand over
/// [probe.r_start, +inf). Doubling windows are integrated adaptively;
/// geometrically decaying windows (ratio <= 0.95 across the last four)
/// give Convergent with a geometric tail bound, non-decaying or slower than
/// harmonic partial-sum growth gives Divergent, anything else Inconclusive.
ConvergenceVerdict classify_integral(const std::function<double(double)>& integrand,
                                     const TailProbe& probe);

/// Same engine with the integrand given as an expression.
ConvergenceVerdict classify_integral(const ScalarFunction& integrand,
                                     const TailProbe& probe);

} // namespace holab
