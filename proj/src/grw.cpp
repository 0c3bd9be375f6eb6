#include "holab/grw.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace holab {

namespace {

std::string fmt(const char* pattern, double a, double b = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), pattern, a, b);
    return buf;
}

} // namespace

GRWSpacetime::GRWSpacetime(Interval interval, ScalarFunction warping, int spatial_dim,
                           double fiber_sec_floor)
    : interval_(interval), f_(std::move(warping)), n_(spatial_dim),
      fiber_sec_floor_(fiber_sec_floor) {
    if (n_ < 2) throw ConstructionError("spatial dimension must be >= 2");
    for (double t : sample_grid(256)) {
        double v = f_.value(t);
        if (!(v > 0.0))
            throw ConstructionError(fmt("warping function not positive at t = %.6g", t));
    }
}

std::vector<double> GRWSpacetime::sample_grid(int points) const {
    double lo = interval_.lo, hi = interval_.hi;
    bool lo_inf = !(lo > -std::numeric_limits<double>::infinity());
    bool hi_inf = !(hi < std::numeric_limits<double>::infinity());
    if (lo_inf && hi_inf) {
        lo = -32.0;
        hi = 32.0;
    } else if (lo_inf) {
        lo = hi - 64.0;
    } else if (hi_inf) {
        hi = lo + 64.0;
    }
    // Nudge off open endpoints.
    double pad = (hi - lo) * 1e-6;
    if (interval_.lo_open || lo_inf) lo += pad;
    if (interval_.hi_open || hi_inf) hi -= pad;
    std::vector<double> g;
    g.reserve(points);
    for (int i = 0; i < points; ++i)
        g.push_back(lo + (hi - lo) * static_cast<double>(i) / (points - 1));
    return g;
}

HypersurfacePointData slice_point(const GRWSpacetime& st, double tau) {
    if (!st.interval().contains(tau)) throw DomainError("slice time outside the interval");
    double h = hubble(st.warping(), tau);
    HypersurfacePointData p;
    p.tau = tau;
    p.H = h;
    p.grad_tau_sq = 0.0;
    p.umbilic_lambda = -h;
    return p;
}

GridCheckReport check_log_concavity(const GRWSpacetime& st,
                                    const std::vector<double>& t_grid) {
    GridCheckReport rep;
    rep.interpolated = st.warping().interpolated();
    rep.worst_value = -std::numeric_limits<double>::infinity();
    for (double t : t_grid) {
        double v = log_second_derivative(st.warping(), t);
        bool ok = v <= 1e-12;
        rep.rows.push_back({t, v, ok});
        if (v > rep.worst_value) {
            rep.worst_value = v;
            rep.worst_t = t;
        }
        if (!ok) rep.holds = false;
    }
    return rep;
}

bool check_meaf(const GRWSpacetime& st, const HypersurfacePointData& p) {
    if (!st.interval().contains(p.tau)) throw DomainError("sample tau outside the interval");
    double h = hubble(st.warping(), p.tau);
    double n = st.spatial_dim();
    return p.H * p.H <= 4.0 * (n - 1.0) / (n * n) * h * h + 1e-12;
}

RicciBound ricci_lower_bound(const GRWSpacetime& st, const HypersurfacePointData& p) {
    if (st.fiber_sec_floor() < 0.0)
        throw DomainError("fiber curvature floor is negative; the reduction is not a bound");
    if (p.grad_tau_sq < 0.0) throw DomainError("|grad tau|^2 must be nonnegative");
    double h = hubble(st.warping(), p.tau);
    double lf2 = log_second_derivative(st.warping(), p.tau);
    double n = st.spatial_dim();
    RicciBound b;
    b.log_f_2nd = lf2;
    b.conservative = (n - 1.0) * h * h - lf2 * p.grad_tau_sq - n * n * p.H * p.H / 4.0;
    if (p.umbilic_lambda) {
        double t = *p.umbilic_lambda + n * p.H / 2.0;
        b.umbilic_exact_extra = t * t;
    }
    return b;
}

NullConvergenceReport check_null_convergence(const GRWSpacetime& st,
                                             const std::vector<double>& t_grid) {
    NullConvergenceReport rep;
    rep.fiber_ok = st.fiber_sec_floor() >= 0.0;
    rep.log_concavity = check_log_concavity(st, t_grid);
    rep.holds = rep.fiber_ok && rep.log_concavity.holds;
    return rep;
}

namespace {

/// Shared hypothesis rows of the two pipelines: log-concavity, fiber floor,
/// and the mean-curvature inequality (coefficient 4(n-1)/n^2, which is 1
/// for surfaces) at every sample.
void grw_common_hypotheses(const GRWSpacetime& st,
                           const std::vector<HypersurfacePointData>& samples,
                           CriterionReport& rep) {
    GridCheckReport lc = check_log_concavity(st, st.sample_grid());
    std::string lcd = fmt("worst (log f)'' = %.6g at t = %.6g", lc.worst_value, lc.worst_t);
    if (lc.interpolated) lcd += " [interpolated warping]";
    rep.hypotheses.push_back(
        {"log_concave_warping", lc.holds ? HypothesisState::Pass : HypothesisState::Fail, lcd});

    rep.hypotheses.push_back({"fiber_curvature_nonnegative",
                              st.fiber_sec_floor() >= 0.0 ? HypothesisState::Pass
                                                          : HypothesisState::Fail,
                              fmt("fiber sectional curvature floor = %.6g", st.fiber_sec_floor())});

    bool all = true;
    double worst_excess = -std::numeric_limits<double>::infinity();
    double worst_tau = 0.0;
    for (const auto& p : samples) {
        double h = hubble(st.warping(), p.tau);
        double n = st.spatial_dim();
        double excess = p.H * p.H - 4.0 * (n - 1.0) / (n * n) * h * h;
        if (excess > worst_excess) {
            worst_excess = excess;
            worst_tau = p.tau;
        }
        if (!check_meaf(st, p)) all = false;
    }
    rep.hypotheses.push_back(
        {"mean_curvature_bound", all ? HypothesisState::Pass : HypothesisState::Fail,
         samples.empty()
             ? "no samples supplied"
             : fmt("worst H^2 excess %.6g at tau = %.6g", worst_excess, worst_tau)});
    if (samples.empty()) rep.hypotheses.back().state = HypothesisState::Inconclusive;
}

} // namespace

CriterionReport pipeline_thm43(const GRWSpacetime& st,
                               const std::vector<HypersurfacePointData>& samples,
                               const ModelManifold& induced, double sigma0,
                               const TailProbe& probe) {
    CriterionReport rep;
    rep.criterion = "thm43";
    if (st.spatial_dim() < 3) {
        rep.conclusion = Conclusion::NotApplicable;
        rep.diagnostic = "surface case: use the prop44 pipeline";
        return rep;
    }
    grw_common_hypotheses(st, samples, rep);
    for (const auto& h : rep.hypotheses) {
        if (!h.ok()) {
            rep.conclusion = Conclusion::NotApplicable;
            rep.diagnostic = "a geometric hypothesis fails; nonnegative Ricci is not implied";
            return rep;
        }
    }
    // The three checks above force Ric >= 0 at the sampled points; pass that
    // to the density-floor criterion as evidence.
    CriterionReport inner = criterion_thm31(induced, sigma0, true, probe);
    for (auto& h : inner.hypotheses) rep.hypotheses.push_back(std::move(h));
    rep.conclusion = inner.conclusion;
    rep.violation_radius = inner.violation_radius;
    rep.key_integral = std::move(inner.key_integral);
    rep.diagnostic = inner.diagnostic;
    return rep;
}

CriterionReport pipeline_prop44(const GRWSpacetime& st,
                                const std::vector<HypersurfacePointData>& samples,
                                double sigma0, const ModelManifold* induced,
                                const TailProbe& probe) {
    CriterionReport rep;
    rep.criterion = "prop44";
    if (st.spatial_dim() != 2) {
        rep.conclusion = Conclusion::NotApplicable;
        rep.diagnostic = "only the surface case is covered; use the thm43 pipeline";
        return rep;
    }
    grw_common_hypotheses(st, samples, rep);
    for (const auto& h : rep.hypotheses) {
        if (!h.ok()) {
            rep.conclusion = Conclusion::NotApplicable;
            rep.diagnostic = "a geometric hypothesis fails";
            return rep;
        }
    }
    rep.conclusion = Conclusion::ViolationDetected;
    rep.diagnostic =
        "surface has nonnegative Gaussian curvature, hence is parabolic; a constant "
        "entropy density floor cannot satisfy the area bound";
    if (induced) {
        CriterionReport inner = corollary35_report(*induced, sigma0, probe);
        for (auto& h : inner.hypotheses) rep.hypotheses.push_back(std::move(h));
        if (inner.conclusion == Conclusion::ViolationDetected) {
            rep.violation_radius = inner.violation_radius;
            rep.key_integral = std::move(inner.key_integral);
        } else {
            rep.diagnostic += "; explicit radius search: " + inner.diagnostic;
        }
    }
    return rep;
}

} // namespace holab
