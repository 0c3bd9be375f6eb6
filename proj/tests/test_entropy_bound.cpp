#include "doctest.h"

#include <cmath>

#include "holab/entropy_bound.hpp"

using namespace holab;

namespace {
const double kPi = 3.14159265358979323846;

ModelManifold euclidean(int n) { return ModelManifold(n, ScalarFunction::parse("r")); }
} // namespace

TEST_CASE("entropy spec construction") {
    CHECK_THROWS_AS(EntropySpec::constant_density(0.0), ConstructionError);
    CHECK_THROWS_AS(EntropySpec::constant_density(-1.0), ConstructionError);
    CHECK_NOTHROW(EntropySpec::constant_density(0.5));
    CHECK_NOTHROW(EntropySpec::radial(ScalarFunction::parse("R^2")));
    // decreasing distribution rejected
    CHECK_THROWS_AS(EntropySpec::radial(ScalarFunction::parse("100 - R")), ConstructionError);
    // negative distribution rejected
    CHECK_THROWS_AS(EntropySpec::radial(ScalarFunction::parse("R - 100")), ConstructionError);
}

TEST_CASE("entropy of a ball") {
    ModelManifold m = euclidean(3);
    EntropySpec unit = EntropySpec::constant_density(1.0);
    CHECK(entropy_of_ball(unit, m, 1.0) == doctest::Approx(4.0 * kPi / 3.0).epsilon(1e-10));
    EntropySpec sq = EntropySpec::radial(ScalarFunction::parse("R^2"));
    CHECK(entropy_of_ball(sq, m, 3.0) == doctest::Approx(9.0));
}

TEST_CASE("first violation radius on flat 3-space") {
    ModelManifold m = euclidean(3);
    BoundReport rep = check_bound(EntropySpec::constant_density(1.0), m, 0.1, 2.0);
    REQUIRE(rep.first_violation.has_value());
    CHECK(*rep.first_violation == doctest::Approx(0.75).epsilon(1e-9));
    CHECK_FALSE(rep.holds());

    rep = check_bound(EntropySpec::constant_density(2.0), m, 0.1, 2.0);
    REQUIRE(rep.first_violation.has_value());
    CHECK(*rep.first_violation == doctest::Approx(0.375).epsilon(1e-9));
}

TEST_CASE("scaling law: violation radius times density is 3/4") {
    ModelManifold m = euclidean(3);
    for (double s0 : {0.1, 0.5, 1.0, 2.0, 10.0}) {
        BoundReport rep = check_bound(EntropySpec::constant_density(s0), m, 0.075 / s0, 7.5 / s0);
        REQUIRE(rep.first_violation.has_value());
        CHECK(*rep.first_violation * s0 == doctest::Approx(0.75).epsilon(1e-9));
    }
}

TEST_CASE("margin equals area/4 minus entropy pointwise") {
    ModelManifold m = euclidean(3);
    EntropySpec spec = EntropySpec::constant_density(1.0);
    BoundReport rep = check_bound(spec, m, 0.1, 2.0);
    for (std::size_t i = 0; i < rep.radius_grid.size(); ++i) {
        CHECK(rep.margin[i] == rep.rhs[i] - rep.lhs[i]);
        CHECK(rep.rhs[i] ==
              doctest::Approx(0.25 * m.sphere_area(rep.radius_grid[i])).epsilon(1e-12));
    }
}

TEST_CASE("no violation for sub-critical density on exponential growth") {
    // sinh profile, n = 3: the area side grows strictly faster than the
    // density times volume for densities below the critical one.
    ModelManifold m(3, ScalarFunction::parse("sinh(r)"));
    BoundReport rep = check_bound(EntropySpec::constant_density(0.4), m, 0.1, 10.0);
    CHECK(rep.holds());
    CHECK_FALSE(rep.first_violation.has_value());
    for (double mg : rep.margin) CHECK(mg > 0.0);
}

TEST_CASE("radial distribution against flat plane") {
    ModelManifold m = euclidean(2);
    // S(R) = R^2 against Area/4 = pi R / 2: violation where R^2 > pi R/2.
    BoundReport rep = check_bound(EntropySpec::radial(ScalarFunction::parse("R^2")), m, 0.1, 10.0);
    REQUIRE(rep.first_violation.has_value());
    CHECK(*rep.first_violation == doctest::Approx(kPi / 2.0).epsilon(1e-9));
}

TEST_CASE("implied volume floor") {
    VolumeFloor f = implied_volume_floor(0.5, 1.0);
    CHECK_FALSE(f.overflowed);
    CHECK(f.value == doctest::Approx(std::exp(2.0)).epsilon(1e-14));
    CHECK(implied_volume_floor(1.0, 0.0).value == doctest::Approx(1.0));
    CHECK(implied_volume_floor(0.25, 2.0).value == doctest::Approx(std::exp(2.0)).epsilon(1e-14));
    VolumeFloor big = implied_volume_floor(1.0, 200.0);
    CHECK(big.overflowed);
    CHECK(std::isinf(big.value));
    CHECK_THROWS_AS(implied_volume_floor(-1.0, 1.0), DomainError);
}

TEST_CASE("volume floor report on flat space") {
    ModelManifold m = euclidean(3);
    VolumeFloorReport rep = check_volume_floor(m, 1.0, {0.01, 1.0, 10.0});
    // Vol(B_10) = 4188.8 << e^40; the literal floor fails everywhere here.
    CHECK_FALSE(rep.literal_all);
    CHECK_FALSE(rep.rows[2].literal_holds);
    // near 0 the floor tends to 1 while Vol tends to 0
    CHECK_FALSE(rep.rows[0].literal_holds);
    // differential form: 4 <= 3/R holds only for R <= 3/4
    CHECK(rep.rows[0].differential_holds);
    CHECK_FALSE(rep.rows[2].differential_holds);
}

TEST_CASE("volume floor crossover on super-critical growth") {
    // Vol ~ 0.1 e^{5R}: the literal floor e^{4R} holds beyond R ~ 2.3 and
    // fails below; the differential form holds from some radius on.
    ModelManifold m(3, ScalarFunction::parse("sinh(2.5*r)/2.5"));
    VolumeFloorReport rep = check_volume_floor(m, 1.0, {1.0, 2.0, 3.0, 4.0, 8.0});
    CHECK_FALSE(rep.rows[0].literal_holds);
    CHECK_FALSE(rep.rows[1].literal_holds);
    CHECK(rep.rows[2].literal_holds);
    CHECK(rep.rows[3].literal_holds);
    CHECK(rep.rows[4].literal_holds);
}

TEST_CASE("entropy l1 condition") {
    ModelManifold m = euclidean(3);
    TailProbe probe;
    ConvergenceVerdict v =
        entropy_l1_condition(EntropySpec::radial(ScalarFunction::parse("R^2")), m, probe);
    CHECK(v.convergent());
    CHECK(*v.value == doctest::Approx(1.0).epsilon(1e-8)); // integral of R^{-2} from 1

    v = entropy_l1_condition(EntropySpec::radial(ScalarFunction::parse("R")), m, probe);
    CHECK(v.divergent());

    v = entropy_l1_condition(EntropySpec::radial(ScalarFunction::parse("exp(R)")), m, probe);
    CHECK(v.convergent());
    CHECK(*v.value == doctest::Approx(std::exp(-1.0)).epsilon(1e-8));

    // constant density: 1/S = 1/(sigma0 Vol) ~ R^{-3} on flat 3-space
    v = entropy_l1_condition(EntropySpec::constant_density(2.0), m, probe);
    CHECK(v.convergent());
    CHECK(*v.value == doctest::Approx(3.0 / (16.0 * kPi)).epsilon(1e-7));
}

TEST_CASE("saturating configuration is flagged as noise limited, not violated") {
    // sigma = sinh(2r)/2 with sigma0 = 1 saturates the bound asymptotically:
    // the true margin stays positive but falls below double resolution of the
    // sides near R ~ 10. The report must not fabricate a violation radius.
    ModelManifold m(3, ScalarFunction::parse("sinh(2*r)/2"));
    BoundReport rep = check_bound(EntropySpec::constant_density(1.0), m, 0.1, 64.0);
    CHECK(rep.holds());
    CHECK(rep.noise_limited);
}
