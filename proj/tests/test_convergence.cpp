#include "doctest.h"

#include <cmath>

#include "holab/convergence.hpp"

using namespace holab;

namespace {
const double kPi = 3.14159265358979323846;
}

TEST_CASE("closed-form convergent tails") {
    TailProbe probe;

    // Integral of R e^{-4R} over [1, inf) = (5/16) e^{-4}.
    ConvergenceVerdict v =
        classify_integral([](double r) { return r * std::exp(-4.0 * r); }, probe);
    CHECK(v.convergent());
    CHECK(*v.value == doctest::Approx(5.0 / 16.0 * std::exp(-4.0)).epsilon(1e-9));

    // Integral of 1/(4 pi R^2) over [1, inf) = 1/(4 pi).
    v = classify_integral([](double r) { return 1.0 / (4.0 * kPi * r * r); }, probe);
    CHECK(v.convergent());
    CHECK(*v.value == doctest::Approx(1.0 / (4.0 * kPi)).epsilon(1e-9));
    CHECK(*v.fitted_ratio == doctest::Approx(0.5).epsilon(1e-6));
    CHECK(*v.fitted_exponent == doctest::Approx(2.0).epsilon(1e-5));

    // Integral of 1/(2 pi sinh R) over [1, inf) = ln(coth(1/2)) / (2 pi).
    v = classify_integral([](double r) { return 1.0 / (2.0 * kPi * std::sinh(r)); }, probe);
    CHECK(v.convergent());
    CHECK(*v.value == doctest::Approx(std::log(1.0 / std::tanh(0.5)) / (2.0 * kPi)).epsilon(1e-9));
}

TEST_CASE("divergent tails") {
    TailProbe probe;
    ConvergenceVerdict v = classify_integral([](double r) { return 1.0 / (2.0 * kPi * r); }, probe);
    CHECK(v.divergent());

    v = classify_integral([](double r) { return r / (kPi * r * r); }, probe);
    CHECK(v.divergent());

    v = classify_integral([](double r) { return r; }, probe);
    CHECK(v.divergent());
}

TEST_CASE("scale invariance of the verdict") {
    TailProbe probe;
    for (double c : {1e-6, 1.0, 1e6}) {
        ConvergenceVerdict conv =
            classify_integral([c](double r) { return c * std::exp(-r); }, probe);
        CHECK(conv.convergent());
        CHECK(*conv.value == doctest::Approx(c * std::exp(-1.0)).epsilon(1e-8));
        ConvergenceVerdict div = classify_integral([c](double r) { return c / r; }, probe);
        CHECK(div.divergent());
    }
}

TEST_CASE("expression overload") {
    TailProbe probe;
    ConvergenceVerdict v = classify_integral(ScalarFunction::parse("R/exp(4*R)"), probe);
    CHECK(v.convergent());
    CHECK(*v.value == doctest::Approx(5.0 / 16.0 * std::exp(-4.0)).epsilon(1e-9));
}

TEST_CASE("negative integrand is rejected as inconclusive") {
    TailProbe probe;
    ConvergenceVerdict v = classify_integral([](double r) { return std::cos(3.0 * r); }, probe);
    CHECK(v.status == Convergence::Inconclusive);
}

TEST_CASE("integrand that underflows to zero far out") {
    TailProbe probe;
    probe.window_doublings = 12; // windows reach R = 4096; exp underflows long before
    ConvergenceVerdict v = classify_integral([](double r) { return std::exp(-r); }, probe);
    CHECK(v.convergent());
    CHECK(*v.value == doctest::Approx(std::exp(-1.0)).epsilon(1e-9));
}

TEST_CASE("probe validation") {
    TailProbe bad;
    bad.window_doublings = 2;
    CHECK_THROWS_AS(classify_integral([](double r) { return 1.0 / r; }, bad), DomainError);
    bad = TailProbe{};
    bad.r_start = 0.0;
    CHECK_THROWS_AS(classify_integral([](double r) { return 1.0 / r; }, bad), DomainError);
}
