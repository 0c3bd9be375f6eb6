#include "holab/convergence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "holab/quadrature.hpp"

namespace holab {

namespace {

constexpr double kConvergentRatio = 0.95; // max window ratio over the last 4
constexpr double kDivergentGrowth = 0.01; // min partial-sum growth per window

} // namespace

ConvergenceVerdict classify_integral(const std::function<double(double)>& integrand,
                                     const TailProbe& probe) {
    probe.validate();
    ConvergenceVerdict out;
    double lo = probe.r_start;
    double running = 0.0;
    double quad_err = 0.0;
    int negligible_run = 0;
    for (int k = 0; k < probe.window_doublings; ++k) {
        double hi = 2.0 * lo;
        QuadResult q;
        try {
            q = integrate(integrand, lo, hi, probe.quad_tol, 0.0, 10000);
        } catch (const Error& e) {
            out.status = Convergence::Inconclusive;
            out.diagnostic = std::string("window [") + std::to_string(lo) + ", " +
                             std::to_string(hi) + "] failed: " + e.what();
            return out;
        }
        if (!q.converged) {
            out.status = Convergence::Inconclusive;
            out.diagnostic = "window quadrature did not meet tolerance";
            return out;
        }
        if (q.value < 0.0) {
            out.status = Convergence::Inconclusive;
            out.diagnostic = "integrand is not positive on a window";
            return out;
        }
        running += q.value;
        quad_err += q.error;
        out.window_integrals.push_back(q.value);
        out.partial_sums.push_back(running);
        // Once the window contribution is below double resolution of the sum
        // for two windows in a row, the remaining tail cannot move the total.
        if (running > 0.0 && q.value <= 1e-16 * running)
            ++negligible_run;
        else
            negligible_run = 0;
        if (negligible_run >= 2) break;
        lo = hi;
    }

    const auto& w = out.window_integrals;
    const std::size_t nw = w.size();
    if (running == 0.0) {
        out.status = Convergence::Convergent;
        out.value = 0.0;
        out.error = 0.0;
        out.fitted_ratio = 0.0;
        out.diagnostic = "integrand vanishes on the probed range";
        return out;
    }

    auto ratio_at = [&](std::size_t k) { // w[k+1] / w[k]
        if (w[k] == 0.0) return w[k + 1] == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
        return w[k + 1] / w[k];
    };

    std::size_t tail_pairs = std::min<std::size_t>(3, nw - 1); // last <=3 ratios
    bool all_decaying = true;
    double worst_ratio = 0.0;
    for (std::size_t i = nw - 1 - tail_pairs; i + 1 < nw; ++i) {
        double rho = ratio_at(i);
        worst_ratio = std::max(worst_ratio, rho);
        if (!(rho <= kConvergentRatio)) all_decaying = false;
    }

    bool non_decreasing = true;
    bool sum_growing = true;
    for (std::size_t i = nw - 1 - tail_pairs; i + 1 < nw; ++i) {
        if (w[i + 1] < w[i] * (1.0 - 1e-12)) non_decreasing = false;
        double growth = w[i + 1] / out.partial_sums[i];
        if (growth < kDivergentGrowth) sum_growing = false;
    }

    if (negligible_run >= 2 || (all_decaying && nw >= 2)) {
        double rho = std::min(worst_ratio, 0.999);
        double tail = (rho > 0.0) ? w.back() * rho / (1.0 - rho) : 0.0;
        out.status = Convergence::Convergent;
        out.value = running + tail;
        out.error = 0.5 * tail + quad_err;
        out.fitted_ratio = worst_ratio;
        if (worst_ratio > 0.0)
            out.fitted_exponent = 1.0 - std::log2(worst_ratio);
        return out;
    }
    if (non_decreasing || sum_growing) {
        out.status = Convergence::Divergent;
        out.fitted_ratio = worst_ratio;
        if (worst_ratio > 0.0 && std::isfinite(worst_ratio))
            out.fitted_exponent = 1.0 - std::log2(worst_ratio);
        out.diagnostic = non_decreasing ? "window integrals do not decay"
                                        : "partial sums keep growing by >= 1% per window";
        return out;
    }
    out.status = Convergence::Inconclusive;
    out.fitted_ratio = worst_ratio;
    out.diagnostic = "window decay too slow to certify convergence, too fast for divergence";
    return out;
}

ConvergenceVerdict classify_integral(const ScalarFunction& integrand, const TailProbe& probe) {
    return classify_integral([&](double r) { return integrand.value(r); }, probe);
}

} // namespace holab
