#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "holab/scalar_function.hpp"

namespace holab {

/// Area of the unit (n-1)-sphere, 2*pi^(n/2) / Gamma(n/2).
double unit_sphere_area(int n);

struct BallGeometry {
    double radius = 0.0;
    double area = 0.0;       // Area of the boundary sphere at this radius
    double volume = 0.0;     // Vol of the geodesic ball
    double quad_error = 0.0; // estimated absolute quadrature error of volume
};

struct RicciRange {
    double r = 0.0;
    double ric_min = 0.0;
    double ric_max = 0.0;
};

/// Rotationally symmetric manifold with metric dr^2 + sigma(r)^2 g_{S^{n-1}}.
/// Construction enforces sigma(0) = 0 and sigma'(0) = 1 (within 1e-9) and
/// spot-checks positivity of sigma on (0, r_max).
class ModelManifold {
public:
    ModelManifold(int dim, ScalarFunction sigma,
                  double r_max = std::numeric_limits<double>::infinity());

    int dim() const { return n_; }
    double r_max() const { return r_max_; }
    const ScalarFunction& sigma() const { return sigma_; }

    /// omega_{n-1} * sigma(R)^{n-1}. Requires 0 < R < r_max.
    double sphere_area(double R) const;

    /// Area integrand without the positive-radius guard; area_unchecked(0) = 0.
    double area_unchecked(double r) const;

    /// Coarea volume: integral of sphere_area over [0, R], adaptive quadrature
    /// with tolerance 1e-10 * max(1, result). Throws QuadratureError if the
    /// panel budget is exhausted.
    BallGeometry ball_volume(double R) const;

    /// Extremes of the Ricci quadratic form over unit tangent vectors at
    /// radius r. Eigenvalues: radial -(n-1) sigma''/sigma and spherical
    /// -sigma''/sigma + (n-2)(1 - sigma'^2)/sigma^2.
    RicciRange ricci_range(double r) const;

private:
    void check_radius(double R) const;

    int n_;
    ScalarFunction sigma_;
    double r_max_;
    double omega_; // unit sphere area for this dimension
};

/// Monotone cache of cumulative ball volumes. Repeated queries at increasing
/// radii integrate only the increments, so criteria that evaluate
/// Vol(B_R) at thousands of quadrature nodes stay cheap.
class VolumeCache {
public:
    explicit VolumeCache(const ModelManifold& m) : m_(&m) {}

    double operator()(double R);

private:
    const ModelManifold* m_;
    std::map<double, double> known_;
};

// --- Hypothesis checks -----------------------------------------------------

struct RicciDecayRow {
    double r;
    double ric_min;
    double bound; // -C1 / r^2
    bool ok;
};

struct RicciDecayReport {
    bool holds = true;
    std::vector<RicciDecayRow> rows;
    std::vector<double> violations; // radii where the decay bound fails
};

/// Checks Ric >= -C1 r^{-2} at every grid radius.
RicciDecayReport check_ricci_decay(const ModelManifold& m, double c1,
                                   const std::vector<double>& r_grid);

enum class ComparisonVerdict { Holds, Fails, Inconclusive };

struct VolumeComparisonRow {
    double R;
    double vol_center;        // Vol(B_R(q)), q the pole
    double offball_lower;     // confident lower bound for Vol(B_{R/2}(p))
    double offball_upper;     // deterministic upper bound (annulus volume)
    double mc_estimate;       // raw Monte Carlo estimate before confidence
    double mc_stderr;
    ComparisonVerdict verdict;
};

struct VolumeComparisonReport {
    ComparisonVerdict verdict = ComparisonVerdict::Holds; // aggregate over rows
    bool holds() const { return verdict == ComparisonVerdict::Holds; }
    std::vector<VolumeComparisonRow> rows;
};

struct VolumeComparisonOptions {
    std::uint64_t samples = 20000;
    std::uint64_t seed = 0x9D2C5680CABA11EDULL;
    double z_confidence = 2.5758; // two-sided 99%
};

/// Volume comparison Vol(B_R(q)) <= C2 * Vol(B_{R/2}(p)) with q the pole and
/// p on the boundary sphere of radius R. The off-pole ball volume is
/// lower-bounded by Monte Carlo over the annulus |r - R| < R/2: a sampled
/// point counts as inside when an explicit radial-arc-radial path from p is
/// shorter than R/2, so the estimate bounds the true ball volume from below.
/// The deterministic annulus volume serves as the upper bound for refuting
/// the inequality; anything between the two bounds is Inconclusive.
VolumeComparisonReport check_volume_comparison(const ModelManifold& m, double c2,
                                               const std::vector<double>& R_grid,
                                               const VolumeComparisonOptions& opt = {});

/// Length of the shortest "descend to radius rho, swing by angle gamma, climb
/// back" path between points at radii r1 and r2 with angular separation
/// gamma. Upper-bounds the geodesic distance on any model manifold.
double path_distance_upper_bound(const ModelManifold& m, double r1, double r2,
                                 double gamma);

} // namespace holab
