#include "holab/parabolicity.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace holab {

const char* to_string(Conclusion c) {
    switch (c) {
        case Conclusion::Transient: return "Transient";
        case Conclusion::NonParabolic: return "NonParabolic";
        case Conclusion::ViolationDetected: return "ViolationDetected";
        case Conclusion::NotApplicable: return "NotApplicable";
    }
    return "?";
}

const char* to_string(HypothesisState s) {
    switch (s) {
        case HypothesisState::Pass: return "pass";
        case HypothesisState::Fail: return "fail";
        case HypothesisState::Inconclusive: return "inconclusive";
        case HypothesisState::Asserted: return "asserted";
    }
    return "?";
}

namespace {

std::vector<double> log_grid(double lo, double hi, int n) {
    std::vector<double> g;
    g.reserve(n);
    for (int i = 0; i < n; ++i)
        g.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1)));
    return g;
}

std::string fmt(const char* pattern, double a, double b = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), pattern, a, b);
    return buf;
}

double probe_top(const TailProbe& probe) {
    return probe.r_start * std::pow(2.0, probe.window_doublings);
}

/// Sweep of the profile's Ricci extremes; min over a log grid.
HypothesisResult ricci_nonneg_check(const ModelManifold& m, const TailProbe& probe) {
    double hi = std::min(probe_top(probe), 0.999 * m.r_max());
    double worst = std::numeric_limits<double>::infinity();
    double worst_r = 0.0;
    for (double r : log_grid(probe.r_start / 64.0, hi, 192)) {
        RicciRange rr = m.ricci_range(r);
        if (rr.ric_min < worst) {
            worst = rr.ric_min;
            worst_r = r;
        }
    }
    bool ok = worst >= -1e-12;
    return {"ricci_nonnegative", ok ? HypothesisState::Pass : HypothesisState::Fail,
            fmt("min Ricci eigenvalue %.6g at r = %.6g", worst, worst_r)};
}

/// 1/Area as an integrand that underflows gracefully where sigma^{n-1}
/// overflows (the reciprocal is below double resolution there).
double inv_area(const ModelManifold& m, double R) {
    double s = m.sigma().value(R);
    double p = std::pow(s, 1 - m.dim());
    return p / unit_sphere_area(m.dim());
}

} // namespace

CapacityResult capacity_oracle(const ModelManifold& m, double a, const TailProbe& probe) {
    if (!(a > 0.0) || !(a < m.r_max())) throw DomainError("capacity base radius outside range");
    if (m.r_max() != std::numeric_limits<double>::infinity())
        throw DomainError("capacity test needs an unbounded manifold");
    TailProbe p = probe;
    p.r_start = a;
    int n = m.dim();
    ConvergenceVerdict v = classify_integral(
        [&](double s) { return std::pow(m.sigma().value(s), 1 - n); }, p);
    CapacityResult res;
    res.verdict = v;
    if (v.convergent()) {
        res.kind = Parabolicity::NonParabolic;
        res.tail = v.value;
    } else if (v.divergent()) {
        res.kind = Parabolicity::Parabolic;
    }
    return res;
}

CriterionReport criterion_thm31(const ModelManifold& m, double sigma0,
                                std::optional<bool> ricci_evidence, const TailProbe& probe) {
    if (!(sigma0 > 0.0)) throw DomainError("sigma0 must be positive");
    probe.validate();
    CriterionReport rep;
    rep.criterion = "thm31";

    if (ricci_evidence.has_value()) {
        rep.hypotheses.push_back({"ricci_nonnegative",
                                  *ricci_evidence ? HypothesisState::Asserted
                                                  : HypothesisState::Fail,
                                  "supplied as external evidence"});
    } else {
        rep.hypotheses.push_back(ricci_nonneg_check(m, probe));
    }

    EntropySpec spec = EntropySpec::constant_density(sigma0);
    double hi = std::min(probe_top(probe), 0.999 * m.r_max());
    BoundReport bound = check_bound(spec, m, probe.r_start / 64.0, hi);
    HypothesisResult hb;
    hb.name = "entropy_bound_holds";
    if (bound.holds()) {
        hb.state = HypothesisState::Pass;
        hb.detail = fmt("margin positive up to R = %.6g", bound.effective_hi);
        if (bound.range_truncated) hb.detail += " (range truncated at overflow)";
        if (bound.noise_limited) hb.detail += " (margin within evaluation noise far out)";
    } else {
        hb.state = HypothesisState::Fail;
        if (bound.first_violation) {
            rep.violation_radius = bound.first_violation;
            hb.detail = fmt("first violation at R = %.9g", *bound.first_violation);
        } else {
            hb.detail = "bound already violated at range start";
        }
    }
    rep.hypotheses.push_back(hb);

    VolumeCache vol(m);
    ConvergenceVerdict integral = classify_integral(
        [&](double R) -> double {
            try {
                return R / vol(R);
            } catch (const NonFiniteError&) {
                return 0.0; // Vol beyond double range; contribution below resolution
            }
        },
        probe);
    rep.key_integral = integral;
    rep.hypotheses.push_back(
        {"volume_integral_convergent",
         integral.convergent()   ? HypothesisState::Pass
         : integral.divergent()  ? HypothesisState::Fail
                                 : HypothesisState::Inconclusive,
         integral.convergent() ? fmt("tail integral of R/Vol = %.9g", *integral.value)
                               : integral.diagnostic});

    const auto& h = rep.hypotheses;
    if (!bound.holds() && (h[0].ok())) {
        rep.conclusion = Conclusion::ViolationDetected;
        rep.diagnostic = "the manifold cannot satisfy the bound with this density floor";
    } else if (h[0].ok() && h[1].ok() && h[2].ok()) {
        rep.conclusion = Conclusion::Transient;
    } else {
        rep.conclusion = Conclusion::NotApplicable;
        if (integral.divergent() && h[0].ok() && h[1].ok())
            rep.diagnostic =
                "bound verified only on a finite window; tail volume growth is too slow";
    }
    return rep;
}

CriterionReport criterion_thm32(const ModelManifold& m, const EntropySpec& entropy,
                                double c1, double c2, const TailProbe& probe) {
    if (!(c1 > 0.0) || !(c2 > 0.0)) throw DomainError("C1 and C2 must be positive");
    probe.validate();
    CriterionReport rep;
    rep.criterion = "thm32";

    ConvergenceVerdict entl = entropy_l1_condition(entropy, m, probe);
    rep.hypotheses.push_back({"entropy_inverse_l1",
                              entl.convergent()   ? HypothesisState::Pass
                              : entl.divergent()  ? HypothesisState::Fail
                                                  : HypothesisState::Inconclusive,
                              entl.convergent() ? fmt("tail of 1/S = %.9g", *entl.value)
                                                : entl.diagnostic});

    double hi = std::min(probe_top(probe), 0.999 * m.r_max());
    RicciDecayReport decay = check_ricci_decay(m, c1, log_grid(probe.r_start / 64.0, hi, 192));
    rep.hypotheses.push_back(
        {"ricci_radial_decay",
         decay.holds ? HypothesisState::Pass : HypothesisState::Fail,
         decay.holds ? "Ric >= -C1/r^2 on the grid"
                     : fmt("violated at r = %.6g", decay.violations.front())});

    double cmp_hi = std::min(probe.r_start * 16.0, 0.6 * m.r_max());
    VolumeComparisonReport cmp =
        check_volume_comparison(m, c2, log_grid(probe.r_start, cmp_hi, 5));
    HypothesisState cmp_state = cmp.verdict == ComparisonVerdict::Holds ? HypothesisState::Pass
                                : cmp.verdict == ComparisonVerdict::Fails
                                    ? HypothesisState::Fail
                                    : HypothesisState::Inconclusive;
    rep.hypotheses.push_back({"volume_comparison", cmp_state,
                              cmp_state == HypothesisState::Pass
                                  ? "Vol(B_R(q)) <= C2 Vol(B_{R/2}(p)) at all grid radii"
                                  : "comparison not established at some radius"});

    ConvergenceVerdict varea = classify_integral([&](double R) { return inv_area(m, R); }, probe);
    rep.hypotheses.push_back({"area_inverse_l1",
                              varea.convergent()   ? HypothesisState::Pass
                              : varea.divergent()  ? HypothesisState::Fail
                                                   : HypothesisState::Inconclusive,
                              varea.convergent() ? fmt("tail of 1/Area = %.9g", *varea.value)
                                                 : varea.diagnostic});

    VolumeCache vol(m);
    ConvergenceVerdict vvol = classify_integral(
        [&](double R) -> double {
            try {
                return R / vol(R);
            } catch (const NonFiniteError&) {
                return 0.0;
            }
        },
        probe);
    rep.key_integral = vvol;
    rep.hypotheses.push_back({"volume_integral_convergent",
                              vvol.convergent()   ? HypothesisState::Pass
                              : vvol.divergent()  ? HypothesisState::Fail
                                                  : HypothesisState::Inconclusive,
                              vvol.convergent() ? fmt("tail of R/Vol = %.9g", *vvol.value)
                                                : vvol.diagnostic});

    bool any_inconclusive = false, all_ok = true;
    for (const auto& h : rep.hypotheses) {
        if (h.state == HypothesisState::Inconclusive) any_inconclusive = true;
        if (!h.ok()) all_ok = false;
    }
    if (all_ok)
        rep.conclusion = Conclusion::NonParabolic;
    else {
        rep.conclusion = Conclusion::NotApplicable;
        rep.diagnostic = any_inconclusive ? "a hypothesis could not be resolved numerically"
                                          : "a hypothesis of the criterion fails";
    }
    return rep;
}

CriterionReport criterion_thm33(const ModelManifold& m, const EntropySpec& entropy,
                                const TailProbe& probe) {
    probe.validate();
    CriterionReport rep;
    rep.criterion = "thm33";

    ConvergenceVerdict entl = entropy_l1_condition(entropy, m, probe);
    rep.hypotheses.push_back({"entropy_inverse_l1",
                              entl.convergent()   ? HypothesisState::Pass
                              : entl.divergent()  ? HypothesisState::Fail
                                                  : HypothesisState::Inconclusive,
                              entl.convergent() ? fmt("tail of 1/S = %.9g", *entl.value)
                                                : entl.diagnostic});

    ConvergenceVerdict varea = classify_integral([&](double R) { return inv_area(m, R); }, probe);
    rep.key_integral = varea;
    rep.hypotheses.push_back({"area_inverse_l1",
                              varea.convergent()   ? HypothesisState::Pass
                              : varea.divergent()  ? HypothesisState::Fail
                                                   : HypothesisState::Inconclusive,
                              varea.convergent() ? fmt("tail of 1/Area = %.9g", *varea.value)
                                                 : varea.diagnostic});

    if (rep.hypotheses[0].ok() && rep.hypotheses[1].ok())
        rep.conclusion = Conclusion::Transient;
    else {
        rep.conclusion = Conclusion::NotApplicable;
        rep.diagnostic = varea.divergent()
                             ? "1/Area not integrable: the criterion is silent (manifold "
                               "parabolic by the capacity test)"
                             : "hypothesis not established";
    }
    return rep;
}

CriterionReport corollary35_report(const ModelManifold& m, double sigma0,
                                   const TailProbe& probe) {
    if (!(sigma0 > 0.0)) throw DomainError("sigma0 must be positive");
    probe.validate();
    CriterionReport rep;
    rep.criterion = "cor35";

    rep.hypotheses.push_back(ricci_nonneg_check(m, probe));

    CapacityResult cap = capacity_oracle(m, probe.r_start, probe);
    rep.hypotheses.push_back(
        {"parabolic_by_capacity",
         cap.kind == Parabolicity::Parabolic      ? HypothesisState::Pass
         : cap.kind == Parabolicity::NonParabolic ? HypothesisState::Fail
                                                  : HypothesisState::Inconclusive,
         cap.kind == Parabolicity::NonParabolic
             ? "capacity oracle says transient; the contradiction argument does not apply"
             : cap.verdict.diagnostic});
    rep.key_integral = cap.verdict;

    if (!rep.hypotheses[0].ok() || !rep.hypotheses[1].ok()) {
        rep.conclusion = Conclusion::NotApplicable;
        rep.diagnostic = "preconditions not met";
        return rep;
    }

    // Expanding search for the forced violation sigma0 Vol(B_R) > Area/4.
    VolumeCache vol(m);
    auto margin = [&](double R) { return 0.25 * m.area_unchecked(R) - sigma0 * vol(R); };
    const double budget = probe.r_start * std::pow(2.0, 24);
    double lo = probe.r_start * std::pow(2.0, -24);
    double prev = lo;
    double prev_margin = margin(lo);
    std::optional<std::pair<double, double>> bracket;
    for (double R = lo * 2.0; R <= budget; R *= 2.0) {
        double mg = margin(R);
        if (prev_margin >= 0.0 && mg < 0.0) {
            bracket = {prev, R};
            break;
        }
        prev = R;
        prev_margin = mg;
    }
    if (!bracket) {
        if (prev_margin < 0.0) {
            // Violated all the way down the grid; the crossing is below lo.
            rep.violation_radius = lo;
            rep.conclusion = Conclusion::ViolationDetected;
            rep.diagnostic = "bound violated over the entire searched range";
            return rep;
        }
        rep.conclusion = Conclusion::NotApplicable;
        rep.diagnostic = fmt("search budget exceeded: no violation found below R = %.6g", budget);
        return rep;
    }
    auto [blo, bhi] = *bracket;
    for (int iter = 0; iter < 200 && (bhi - blo) > 1e-12 * bhi; ++iter) {
        double mid = 0.5 * (blo + bhi);
        if (margin(mid) >= 0.0)
            blo = mid;
        else
            bhi = mid;
    }
    rep.violation_radius = 0.5 * (blo + bhi);
    rep.conclusion = Conclusion::ViolationDetected;
    return rep;
}

} // namespace holab
