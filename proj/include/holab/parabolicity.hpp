#pragma once

#include <optional>
#include <string>
#include <vector>

#include "holab/convergence.hpp"
#include "holab/entropy_bound.hpp"
#include "holab/model_manifold.hpp"

namespace holab {

enum class Conclusion { Transient, NonParabolic, ViolationDetected, NotApplicable };

enum class HypothesisState { Pass, Fail, Inconclusive, Asserted };

struct HypothesisResult {
    std::string name;
    HypothesisState state;
    std::string detail;

    bool ok() const {
        return state == HypothesisState::Pass || state == HypothesisState::Asserted;
    }
};

struct CriterionReport {
    std::string criterion; // "thm31", "thm32", "thm33", "cor35"
    std::vector<HypothesisResult> hypotheses;
    Conclusion conclusion = Conclusion::NotApplicable;
    std::optional<double> violation_radius;
    std::optional<ConvergenceVerdict> key_integral; // the decisive tail integral
    std::string diagnostic;
};

const char* to_string(Conclusion c);
const char* to_string(HypothesisState s);

enum class Parabolicity { Parabolic, NonParabolic, Inconclusive };

struct CapacityResult {
    Parabolicity kind = Parabolicity::Inconclusive;
    ConvergenceVerdict verdict; // of the tail integral of sigma^{1-n}
    std::optional<double> tail; // its value when finite
};

/// Capacity test for a model manifold: non-parabolic iff the tail integral
/// of sigma(s)^{1-n} from a converges. This is the exact potential-theory
/// oracle the criteria and the Monte Carlo simulator are validated against.
CapacityResult capacity_oracle(const ModelManifold& m, double a, const TailProbe& probe);

/// Transience from a constant entropy-density floor: nonnegative Ricci
/// curvature, the area bound S(B_R) <= Area/4 holding with density sigma0 on
/// the probed range, and convergence of the tail integral of R/Vol(B_R).
/// When ricci_evidence is supplied it is recorded as an asserted hypothesis
/// (the manifold only models the radial volume data of the hypersurface);
/// otherwise the profile's own Ricci range is swept on a grid.
CriterionReport criterion_thm31(const ModelManifold& m, double sigma0,
                                std::optional<bool> ricci_evidence, const TailProbe& probe);

/// Transience from an L1 entropy distribution under radial Ricci decay
/// Ric >= -C1 r^{-2} and the volume comparison condition with constant C2.
CriterionReport criterion_thm32(const ModelManifold& m, const EntropySpec& entropy,
                                double c1, double c2, const TailProbe& probe);

/// Transience for model manifolds: L1 entropy distribution plus convergence
/// of the tail integral of 1/Area, which on a model manifold is exactly
/// non-parabolicity.
CriterionReport criterion_thm33(const ModelManifold& m, const EntropySpec& entropy,
                                const TailProbe& probe);

/// Constructive contradiction on parabolic manifolds of nonnegative Ricci
/// curvature: exhibits the radius at which sigma0 * Vol(B_R) exceeds Area/4.
/// The violating radius must exist, since a parabolic manifold cannot carry
/// the density-floor bound; the search expands geometrically and reports
/// budget exhaustion instead of silently passing.
CriterionReport corollary35_report(const ModelManifold& m, double sigma0,
                                   const TailProbe& probe);

} // namespace holab
