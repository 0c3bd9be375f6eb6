#include "doctest.h"

#include <cmath>
#include <cstring>

#include "holab/brownian_sim.hpp"

using namespace holab;

namespace {

ModelManifold euclidean(int n) { return ModelManifold(n, ScalarFunction::parse("r")); }
ModelManifold hyperbolic(int n) { return ModelManifold(n, ScalarFunction::parse("sinh(r)")); }

bool identical(const HitStats& a, const HitStats& b) {
    return std::memcmp(&a.p_outer, &b.p_outer, sizeof(double)) == 0 &&
           std::memcmp(&a.std_error, &b.std_error, sizeof(double)) == 0 &&
           std::memcmp(&a.mean_exit_time, &b.mean_exit_time, sizeof(double)) == 0 &&
           a.outer_hits == b.outer_hits && a.inner_hits == b.inner_hits &&
           a.censored == b.censored;
}

} // namespace

TEST_CASE("exact hitting probabilities from the scale function") {
    CHECK(exact_hitting_probability(euclidean(3), 1.0, 2.0, 3.0) ==
          doctest::Approx(0.75).epsilon(1e-10));
    CHECK(exact_hitting_probability(euclidean(2), 1.0, 2.0, 4.0) ==
          doctest::Approx(0.5).epsilon(1e-10));
    // s(r) = ln tanh(r/2) on the hyperbolic plane
    auto s = [](double r) { return std::log(std::tanh(0.5 * r)); };
    CHECK(exact_hitting_probability(hyperbolic(2), 1.0, 2.0, 3.0) ==
          doctest::Approx((s(2.0) - s(1.0)) / (s(3.0) - s(1.0))).epsilon(1e-9));
    // degenerate starts
    CHECK(exact_hitting_probability(euclidean(3), 1.0, 1.0, 3.0) == 0.0);
    CHECK(exact_hitting_probability(euclidean(3), 1.0, 3.0, 3.0) == 1.0);
}

TEST_CASE("annulus simulation agrees with the oracle (moderate scale)") {
    SimConfig cfg(euclidean(3), 2.0, 1.0, 3.0);
    cfg.dt = 2e-4;
    cfg.paths = 20000;
    cfg.seed = 99;
    HitStats st = simulate_annulus(cfg);
    CHECK(st.censored == 0);
    double oracle = exact_hitting_probability(cfg.manifold, 1.0, 2.0, 3.0);
    CHECK(std::abs(st.p_outer - oracle) <= 4.0 * st.std_error + cfg.dt * 100.0);
    // mean exit time for this annulus is 1 in the (1/2)Laplacian clock
    CHECK(st.mean_exit_time == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("degenerate starts do not step") {
    SimConfig cfg(euclidean(3), 1.0, 1.0, 3.0);
    cfg.paths = 100;
    HitStats st = simulate_annulus(cfg);
    CHECK(st.p_outer == 0.0);
    CHECK(st.inner_hits == 100);

    SimConfig cfg2(euclidean(3), 3.0, 1.0, 3.0);
    cfg2.paths = 100;
    st = simulate_annulus(cfg2);
    CHECK(st.p_outer == 1.0);
}

TEST_CASE("config validation") {
    CHECK_THROWS_AS(simulate_annulus(SimConfig(euclidean(3), 0.5, 1.0, 3.0)), DomainError);
    CHECK_THROWS_AS(simulate_annulus(SimConfig(euclidean(3), 2.0, -1.0, 3.0)), DomainError);
    SimConfig bad(euclidean(3), 2.0, 1.0, 3.0);
    bad.dt = 0.0;
    CHECK_THROWS_AS(simulate_annulus(bad), DomainError);
}

TEST_CASE("excessive censoring raises") {
    SimConfig cfg(euclidean(3), 2.0, 1.0, 3.0);
    cfg.paths = 200;
    cfg.max_steps = 50; // nowhere near enough at dt = 1e-4
    CHECK_THROWS_AS(simulate_annulus(cfg), CensoringError);
}

TEST_CASE("determinism: worker count does not change a single bit") {
    SimConfig cfg(euclidean(2), 2.0, 1.0, 4.0);
    cfg.dt = 5e-4;
    cfg.paths = 6000;
    cfg.seed = 1234;
    cfg.threads = 1;
    HitStats a = simulate_annulus(cfg);
    cfg.threads = 2;
    HitStats b = simulate_annulus(cfg);
    cfg.threads = 7;
    HitStats c = simulate_annulus(cfg);
    CHECK(identical(a, b));
    CHECK(identical(a, c));
}

TEST_CASE("different seeds decorrelate") {
    SimConfig cfg(euclidean(3), 2.0, 1.0, 3.0);
    cfg.dt = 1e-3;
    cfg.paths = 4000;
    cfg.seed = 1;
    HitStats a = simulate_annulus(cfg);
    cfg.seed = 2;
    HitStats b = simulate_annulus(cfg);
    CHECK(a.outer_hits != b.outer_hits); // astronomically unlikely to collide
}

TEST_CASE("dt refinement does not worsen the bias") {
    // Weak discretization bias decreases when dt shrinks (same seed, same
    // paths); coarse vs fine on the flat 3-space benchmark.
    double oracle = 0.75;
    SimConfig coarse(euclidean(3), 2.0, 1.0, 3.0);
    coarse.dt = 8e-3;
    coarse.paths = 60000;
    coarse.seed = 7;
    SimConfig fine = coarse;
    fine.dt = 1e-4;
    double bias_coarse = std::abs(simulate_annulus(coarse).p_outer - oracle);
    double bias_fine = std::abs(simulate_annulus(fine).p_outer - oracle);
    CHECK(bias_fine <= bias_coarse + 0.002);
}

TEST_CASE("escape probabilities") {
    TailProbe probe;
    EscapeResult e = escape_probability(euclidean(3), 1.0, 2.0, probe);
    REQUIRE(e.kind == EscapeResult::Kind::Escape);
    CHECK(*e.probability == doctest::Approx(0.5).epsilon(1e-8));

    e = escape_probability(euclidean(2), 1.0, 7.0, probe);
    CHECK(e.kind == EscapeResult::Kind::Recurrent);

    auto s = [](double r) { return std::log(std::tanh(0.5 * r)); };
    e = escape_probability(hyperbolic(2), 1.0, 2.0, probe);
    REQUIRE(e.kind == EscapeResult::Kind::Escape);
    CHECK(*e.probability == doctest::Approx((s(2.0) - s(1.0)) / (0.0 - s(1.0))).epsilon(1e-7));
}

TEST_CASE("recurrence trend matches the capacity classification") {
    SimConfig base(euclidean(2), 2.0, 1.0, 4.0);
    base.dt = 1e-4;
    base.paths = 12000;
    base.seed = 2024;
    base.stepping = Stepping::BoundaryAdaptive;
    TrendReport rep = recurrence_monte_carlo(base, {4.0, 16.0, 256.0});
    CHECK(rep.verdict == TrendVerdict::Recurrent);
    CHECK(rep.monotone_inner);
    // exact inner-hit probabilities ln(b/2)/ln b: 0.5, 0.75, 0.875
    CHECK(rep.points[0].p_inner == doctest::Approx(0.5).epsilon(0.05));
    CHECK(rep.points[1].p_inner == doctest::Approx(0.75).epsilon(0.05));
    CHECK(rep.points[2].p_inner == doctest::Approx(0.875).epsilon(0.05));

    SimConfig base3(euclidean(3), 2.0, 1.0, 4.0);
    base3.dt = 1e-4;
    base3.paths = 12000;
    base3.seed = 2024;
    base3.stepping = Stepping::BoundaryAdaptive;
    TrendReport rep3 = recurrence_monte_carlo(base3, {4.0, 8.0, 16.0});
    CHECK(rep3.verdict == TrendVerdict::Transient);
    CHECK(rep3.fitted_outer_limit == doctest::Approx(0.5).epsilon(0.12));
}

TEST_CASE("trend with a degenerate single point") {
    SimConfig base(euclidean(3), 2.0, 1.0, 2.0);
    base.paths = 50;
    TrendReport rep = recurrence_monte_carlo(base, {2.0});
    CHECK(rep.points[0].stats.p_outer == 1.0); // starts on the outer shell
    CHECK(rep.verdict == TrendVerdict::Inconclusive);
}
