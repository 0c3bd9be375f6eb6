#pragma once

#include <optional>
#include <vector>

#include "holab/parabolicity.hpp"
#include "holab/scalar_function.hpp"

namespace holab {

/// Warped product I x_f F with metric -dt^2 + f(t)^2 g_F. The fiber enters
/// only through a lower bound on its sectional curvature.
class GRWSpacetime {
public:
    GRWSpacetime(Interval interval, ScalarFunction warping, int spatial_dim,
                 double fiber_sec_floor);

    const Interval& interval() const { return interval_; }
    const ScalarFunction& warping() const { return f_; }
    int spatial_dim() const { return n_; }
    double fiber_sec_floor() const { return fiber_sec_floor_; }

    /// Grid over the interval used by the pointwise checks; infinite
    /// endpoints are clipped to +-32 around the interval midpoint.
    std::vector<double> sample_grid(int points = 192) const;

private:
    Interval interval_;
    ScalarFunction f_;
    int n_;
    double fiber_sec_floor_;
};

/// Pointwise data of a spacelike hypersurface: height tau, mean curvature H
/// (H = -(1/n) trace A with respect to the future normal), |grad tau|^2, and
/// for umbilic points (A = lambda Id) the factor lambda.
struct HypersurfacePointData {
    double tau = 0.0;
    double H = 0.0;
    double grad_tau_sq = 0.0;
    std::optional<double> umbilic_lambda;
};

/// Constant-time slice data: H = f'(tau)/f(tau), grad tau = 0, and the
/// umbilic factor lambda = -f'/f, which satisfies
/// lambda + nH/2 = ((n-2)/2) f'/f.
HypersurfacePointData slice_point(const GRWSpacetime& st, double tau);

struct RicciBound {
    /// Valid lower bound for Ric(Y, Y) over unit tangent Y when the fiber
    /// floor is nonnegative: (n-1)(f'/f)^2 - (log f)'' |grad tau|^2 - n^2 H^2/4.
    double conservative = 0.0;
    /// (lambda + nH/2)^2 for umbilic points; conservative + this value is
    /// the exact tangential bound for an umbilic point over a flat fiber.
    std::optional<double> umbilic_exact_extra;
    /// (log f)''(tau), reported because the conservative reduction drops
    /// terms that are only nonnegative under log-concavity.
    double log_f_2nd = 0.0;
};

struct GridCheckRow {
    double t;
    double value;
    bool ok;
};

struct GridCheckReport {
    bool holds = true;
    double worst_value = 0.0;
    double worst_t = 0.0;
    bool interpolated = false; // warping came from a table
    std::vector<GridCheckRow> rows;
};

/// (log f)'' <= 0 at every grid point (tolerance 1e-12).
GridCheckReport check_log_concavity(const GRWSpacetime& st,
                                    const std::vector<double>& t_grid);

/// H^2 <= (4(n-1)/n^2) (f'(tau)/f(tau))^2 + 1e-12. With n = 2 the factor is
/// exactly 1.
bool check_meaf(const GRWSpacetime& st, const HypersurfacePointData& p);

/// Lower bound for the Ricci quadratic form at a hypersurface point; the
/// nonnegative frame terms are dropped at their worst case. Throws if the
/// fiber floor is negative (the reduction is not a bound there).
RicciBound ricci_lower_bound(const GRWSpacetime& st, const HypersurfacePointData& p);

struct NullConvergenceReport {
    bool holds = false;
    bool fiber_ok = false;
    GridCheckReport log_concavity;
};

/// Sufficient conditions for Ric(z, z) >= 0 on lightlike z: nonnegative
/// fiber curvature together with log-concave warping.
NullConvergenceReport check_null_convergence(const GRWSpacetime& st,
                                             const std::vector<double>& t_grid);

/// Full transience pipeline for spatial dimension >= 3: log-concavity,
/// fiber floor, the mean-curvature inequality at every sample (which force
/// nonnegative Ricci curvature), then the constant-density criterion on the
/// induced radial model.
CriterionReport pipeline_thm43(const GRWSpacetime& st,
                               const std::vector<HypersurfacePointData>& samples,
                               const ModelManifold& induced, double sigma0,
                               const TailProbe& probe);

/// Surface case (spatial dimension 2): under H^2 <= (f'/f)^2, log-concave
/// warping and nonnegative fiber curvature the surface is parabolic, so a
/// constant-density bound must fail. When the induced geometry is supplied
/// the violating radius is exhibited explicitly.
CriterionReport pipeline_prop44(const GRWSpacetime& st,
                                const std::vector<HypersurfacePointData>& samples,
                                double sigma0, const ModelManifold* induced,
                                const TailProbe& probe);

} // namespace holab
