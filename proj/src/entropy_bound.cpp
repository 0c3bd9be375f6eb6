#include "holab/entropy_bound.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <tuple>

namespace holab {

EntropySpec EntropySpec::constant_density(double sigma0) {
    if (!(sigma0 > 0.0)) throw ConstructionError("entropy density must be positive");
    EntropySpec s;
    s.sigma0_ = sigma0;
    return s;
}

EntropySpec EntropySpec::radial(ScalarFunction fn) {
    // Validate nonnegativity and monotonicity on a grid over the declared
    // domain (clipped to a finite range for infinite domains).
    double lo = std::max(fn.domain().lo, 0.0);
    double hi = std::min(fn.domain().hi, 4096.0);
    if (!(hi > lo)) throw ConstructionError("entropy distribution domain is empty on R >= 0");
    double prev = -std::numeric_limits<double>::infinity();
    const int kGrid = 256;
    for (int i = 0; i <= kGrid; ++i) {
        double r = lo + (hi - lo) * static_cast<double>(i) / kGrid;
        if (!fn.domain().contains(r)) continue;
        double v;
        try {
            v = fn.value(r);
        } catch (const NonFiniteError&) {
            break; // overflow far out; monotone growth up to there already seen
        }
        if (v < 0.0) {
            char buf[96];
            std::snprintf(buf, sizeof(buf), "entropy distribution negative at R = %.6g", r);
            throw ConstructionError(buf);
        }
        if (v < prev - 1e-12 * std::max(1.0, std::abs(prev))) {
            char buf[96];
            std::snprintf(buf, sizeof(buf), "entropy distribution decreasing near R = %.6g", r);
            throw ConstructionError(buf);
        }
        prev = v;
    }
    EntropySpec s;
    s.radial_ = std::move(fn);
    return s;
}

double EntropySpec::sigma0() const {
    if (!is_constant_density()) throw DomainError("not a constant-density entropy spec");
    return sigma0_;
}

const ScalarFunction& EntropySpec::distribution() const {
    if (is_constant_density()) throw DomainError("not a radial entropy distribution");
    return radial_;
}

double entropy_of_ball(const EntropySpec& spec, const ModelManifold& m, double R) {
    if (spec.is_constant_density()) return spec.sigma0() * m.ball_volume(R).volume;
    return spec.distribution().value(R);
}

BoundReport check_bound(const EntropySpec& spec, const ModelManifold& m,
                        double R_lo, double R_hi, int grid_points) {
    if (!(0.0 < R_lo && R_lo < R_hi && R_hi < m.r_max()))
        throw DomainError("check_bound requires 0 < R_lo < R_hi < r_max");
    grid_points = std::max(grid_points, 64);

    BoundReport rep;
    VolumeCache vol(m);
    auto margin_at = [&](double R) {
        double lhs = spec.is_constant_density() ? spec.sigma0() * vol(R)
                                                : spec.distribution().value(R);
        double rhs = 0.25 * m.area_unchecked(R);
        return std::pair<double, double>(lhs, rhs);
    };

    for (int i = 0; i < grid_points; ++i) {
        double R = R_lo * std::pow(R_hi / R_lo,
                                   static_cast<double>(i) / (grid_points - 1));
        double lhs, rhs;
        try {
            std::tie(lhs, rhs) = margin_at(R);
        } catch (const NonFiniteError&) {
            rep.range_truncated = true;
            break; // both sides grow monotonically; beyond overflow stay silent
        }
        rep.radius_grid.push_back(R);
        rep.lhs.push_back(lhs);
        rep.rhs.push_back(rhs);
        rep.margin.push_back(rhs - lhs);
        rep.effective_hi = R;
    }
    if (rep.radius_grid.empty())
        throw NonFiniteError("entropy bound sides overflow over the entire range");

    // A sign change only counts when the margin falls clearly below the
    // evaluation noise floor somewhere past it; saturating configurations
    // (margin exponentially small relative to the sides) otherwise produce
    // violation radii that are pure round-off.
    auto noise_at = [&](std::size_t i) {
        return 5e-8 * (std::abs(rep.lhs[i]) + std::abs(rep.rhs[i]));
    };
    auto genuine_beyond = [&](std::size_t i) {
        for (std::size_t j = i; j < rep.margin.size(); ++j)
            if (rep.margin[j] < -noise_at(j)) return true;
        return false;
    };

    if (rep.margin.front() < 0.0) {
        if (genuine_beyond(0))
            rep.violated_from_start = true;
        else
            rep.noise_limited = true;
        return rep;
    }
    for (std::size_t i = 0; i + 1 < rep.margin.size(); ++i) {
        if (rep.margin[i] >= 0.0 && rep.margin[i + 1] < 0.0) {
            if (!genuine_beyond(i + 1)) {
                rep.noise_limited = true;
                continue;
            }
            double lo = rep.radius_grid[i], hi = rep.radius_grid[i + 1];
            // Bisection on the sign of the continuous margin.
            for (int iter = 0; iter < 200 && (hi - lo) > 1e-12 * hi; ++iter) {
                double mid = 0.5 * (lo + hi);
                auto [lhs, rhs] = margin_at(mid);
                if (rhs - lhs >= 0.0)
                    lo = mid;
                else
                    hi = mid;
            }
            rep.first_violation = 0.5 * (lo + hi);
            break;
        }
    }
    return rep;
}

VolumeFloor implied_volume_floor(double sigma0, double R) {
    if (!(sigma0 > 0.0)) throw DomainError("sigma0 must be positive");
    if (R < 0.0) throw DomainError("radius must be nonnegative");
    double e = 4.0 * sigma0 * R;
    if (e > 709.0) return {std::numeric_limits<double>::infinity(), true};
    return {std::exp(e), false};
}

VolumeFloorReport check_volume_floor(const ModelManifold& m, double sigma0,
                                     const std::vector<double>& R_grid) {
    if (!(sigma0 > 0.0)) throw DomainError("sigma0 must be positive");
    VolumeFloorReport rep;
    for (double R : R_grid) {
        BallGeometry g = m.ball_volume(R);
        VolumeFloor fl = implied_volume_floor(sigma0, R);
        double logd = g.area / g.volume;
        bool lit = !fl.overflowed && g.volume >= fl.value;
        bool diff = 4.0 * sigma0 <= logd * (1.0 + 1e-12);
        rep.rows.push_back({R, g.volume, fl.value, fl.overflowed, lit, logd, diff});
        rep.literal_all = rep.literal_all && lit;
        rep.differential_all = rep.differential_all && diff;
    }
    return rep;
}

ConvergenceVerdict entropy_l1_condition(const EntropySpec& spec, const ModelManifold& m,
                                        const TailProbe& probe) {
    VolumeCache vol(m);
    auto integrand = [&](double R) -> double {
        double s;
        if (spec.is_constant_density()) {
            try {
                s = spec.sigma0() * vol(R);
            } catch (const NonFiniteError&) {
                return 0.0; // S beyond double range: 1/S below resolution
            }
        } else {
            try {
                s = spec.distribution().value(R);
            } catch (const NonFiniteError&) {
                return 0.0;
            }
        }
        if (s <= 0.0) throw DomainError("entropy not positive on the probed tail");
        return 1.0 / s;
    };
    return classify_integral(integrand, probe);
}

} // namespace holab
