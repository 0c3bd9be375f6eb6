#include "holab/model_manifold.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "holab/quadrature.hpp"
#include "holab/rng.hpp"

namespace holab {

double unit_sphere_area(int n) {
    if (n < 1) throw DomainError("unit_sphere_area requires n >= 1");
    double half = 0.5 * static_cast<double>(n);
    return 2.0 * std::pow(3.14159265358979323846, half) / std::tgamma(half);
}

ModelManifold::ModelManifold(int dim, ScalarFunction sigma, double r_max)
    : n_(dim), sigma_(std::move(sigma)), r_max_(r_max) {
    if (n_ < 2) throw ConstructionError("model manifold dimension must be >= 2");
    if (!(r_max_ > 0.0)) throw ConstructionError("r_max must be positive");
    Jet2 at0 = sigma_.jet(0.0);
    if (std::abs(at0.v) > 1e-9) {
        char buf[96];
        std::snprintf(buf, sizeof(buf), "profile must vanish at 0 (got sigma(0) = %.3g)", at0.v);
        throw ConstructionError(buf);
    }
    if (std::abs(at0.d1 - 1.0) > 1e-9) {
        char buf[96];
        std::snprintf(buf, sizeof(buf), "profile must have unit slope at 0 (got sigma'(0) = %.9g)",
                      at0.d1);
        throw ConstructionError(buf);
    }
    // Spot-check positivity on a log grid; trusted afterwards.
    double hi = std::min(r_max_, 1e4);
    double lo = 1e-6;
    const int kGrid = 256;
    for (int i = 0; i < kGrid; ++i) {
        double r = lo * std::pow(hi / lo, static_cast<double>(i) / (kGrid - 1));
        if (r >= r_max_) break;
        double v;
        try {
            v = sigma_.value(r);
        } catch (const NonFiniteError&) {
            continue; // overflow far out is not a sign problem
        }
        if (!(v > 0.0)) {
            char buf[96];
            std::snprintf(buf, sizeof(buf), "profile not positive at r = %.6g (sigma = %.6g)", r, v);
            throw ConstructionError(buf);
        }
    }
    omega_ = unit_sphere_area(n_);
}

void ModelManifold::check_radius(double R) const {
    if (!(R > 0.0) || !(R < r_max_)) {
        char buf[96];
        std::snprintf(buf, sizeof(buf), "radius %.6g outside (0, r_max)", R);
        throw DomainError(buf);
    }
}

double ModelManifold::area_unchecked(double r) const {
    if (r == 0.0) return 0.0;
    double s = sigma_.value(r);
    double a = omega_ * std::pow(s, n_ - 1);
    if (!std::isfinite(a)) throw NonFiniteError("sphere area overflowed");
    return a;
}

double ModelManifold::sphere_area(double R) const {
    check_radius(R);
    return area_unchecked(R);
}

BallGeometry ModelManifold::ball_volume(double R) const {
    check_radius(R);
    QuadResult q = integrate([this](double t) { return area_unchecked(t); }, 0.0, R,
                             1e-10, 1e-10, 10000);
    if (!q.converged)
        throw QuadratureError("ball volume quadrature exhausted its panel budget");
    return {R, area_unchecked(R), q.value, q.error};
}

RicciRange ModelManifold::ricci_range(double r) const {
    check_radius(r);
    Jet2 s = sigma_.jet(r);
    double radial = -(n_ - 1) * s.d2 / s.v;
    double spherical = -s.d2 / s.v + (n_ - 2) * (1.0 - s.d1 * s.d1) / (s.v * s.v);
    return {r, std::min(radial, spherical), std::max(radial, spherical)};
}

double VolumeCache::operator()(double R) {
    auto it = known_.upper_bound(R);
    double base_r = 0.0, base_v = 0.0;
    if (it != known_.begin()) {
        --it;
        base_r = it->first;
        base_v = it->second;
    }
    if (base_r == R) return base_v;
    QuadResult q = integrate([this](double t) { return m_->area_unchecked(t); }, base_r, R,
                             1e-12, 1e-14, 10000);
    if (!q.converged) throw QuadratureError("volume increment quadrature failed");
    double v = base_v + q.value;
    if (!std::isfinite(v)) throw NonFiniteError("ball volume overflowed");
    known_[R] = v;
    return v;
}

RicciDecayReport check_ricci_decay(const ModelManifold& m, double c1,
                                   const std::vector<double>& r_grid) {
    if (!(c1 > 0.0)) throw DomainError("decay constant must be positive");
    RicciDecayReport rep;
    for (double r : r_grid) {
        RicciRange rr = m.ricci_range(r);
        double bound = -c1 / (r * r);
        bool ok = rr.ric_min >= bound - 1e-12 * std::abs(bound);
        rep.rows.push_back({r, rr.ric_min, bound, ok});
        if (!ok) {
            rep.holds = false;
            rep.violations.push_back(r);
        }
    }
    return rep;
}

double path_distance_upper_bound(const ModelManifold& m, double r1, double r2,
                                 double gamma) {
    double rmin = std::min(r1, r2);
    // Through-pole route.
    double best = r1 + r2;
    if (gamma <= 0.0) return std::abs(r1 - r2);
    // Descend to rho, arc of length sigma(rho)*gamma, climb out. The optimum
    // over rho is found on a grid; any rho gives a valid upper bound.
    const int kRho = 48;
    for (int i = 0; i <= kRho; ++i) {
        double rho = rmin * static_cast<double>(i) / kRho;
        double arc = (rho == 0.0) ? 0.0 : m.sigma().value(rho) * gamma;
        best = std::min(best, (r1 - rho) + (r2 - rho) + arc);
    }
    return best;
}

VolumeComparisonReport check_volume_comparison(const ModelManifold& m, double c2,
                                               const std::vector<double>& R_grid,
                                               const VolumeComparisonOptions& opt) {
    if (!(c2 > 0.0)) throw DomainError("comparison constant must be positive");
    VolumeComparisonReport rep;
    int n = m.dim();
    for (double R : R_grid) {
        double vol_center = m.ball_volume(R).volume;
        double r_lo = 0.5 * R, r_hi = 1.5 * R;
        if (r_hi >= m.r_max())
            throw DomainError("comparison radius exceeds manifold range");

        // Deterministic upper bound: the ball around p sits inside the
        // annulus r in (R/2, 3R/2) by the triangle inequality.
        double annulus = m.ball_volume(r_hi).volume - m.ball_volume(r_lo).volume;

        // Monte Carlo lower bound over the annulus, polar coordinates around
        // the pole with p at angle 0. Importance density: uniform in (r, gamma),
        // weighted by the Riemannian volume element.
        //   n >= 3: dV = sigma^{n-1} dr * omega_{n-2} sin^{n-2}(gamma) dgamma
        //   n == 2: dV = sigma dr * dgamma over gamma in (-pi, pi]  (weight 2)
        SplitMix64 rng = SplitMix64::keyed(opt.seed, static_cast<std::uint64_t>(R * 4096.0));
        const double pi = 3.14159265358979323846;
        double ang_const = (n >= 3) ? unit_sphere_area(n - 1) : 2.0;
        double box = (r_hi - r_lo) * pi;
        double sum = 0.0, sum_sq = 0.0;
        for (std::uint64_t i = 0; i < opt.samples; ++i) {
            double r = r_lo + (r_hi - r_lo) * rng.next_open01();
            double gamma = pi * rng.next_open01();
            double w = std::pow(m.sigma().value(r), n - 1) * ang_const;
            if (n >= 3) w *= std::pow(std::sin(gamma), n - 2);
            double d_up = path_distance_upper_bound(m, r, R, gamma);
            double contrib = (d_up < 0.5 * R) ? w : 0.0;
            sum += contrib;
            sum_sq += contrib * contrib;
        }
        double count = static_cast<double>(opt.samples);
        double mean = sum / count;
        double var = std::max(0.0, sum_sq / count - mean * mean);
        double est = box * mean;
        double se = box * std::sqrt(var / count);
        double lower = std::max(0.0, est - opt.z_confidence * se);

        ComparisonVerdict v;
        if (vol_center <= c2 * lower)
            v = ComparisonVerdict::Holds;
        else if (vol_center > c2 * annulus)
            v = ComparisonVerdict::Fails;
        else
            v = ComparisonVerdict::Inconclusive;
        rep.rows.push_back({R, vol_center, lower, annulus, est, se, v});
        if (v == ComparisonVerdict::Fails)
            rep.verdict = ComparisonVerdict::Fails;
        else if (v == ComparisonVerdict::Inconclusive &&
                 rep.verdict == ComparisonVerdict::Holds)
            rep.verdict = ComparisonVerdict::Inconclusive;
    }
    return rep;
}

} // namespace holab
