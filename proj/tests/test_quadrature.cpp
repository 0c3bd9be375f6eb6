#include "doctest.h"

#include <cmath>

#include "holab/quadrature.hpp"
#include "holab/errors.hpp"

using namespace holab;

TEST_CASE("smooth integrands to tight tolerance") {
    QuadResult r = integrate([](double x) { return std::sin(x); }, 0.0, 3.14159265358979323846);
    CHECK(r.converged);
    CHECK(r.value == doctest::Approx(2.0).epsilon(1e-12));

    r = integrate([](double x) { return std::exp(-x * x); }, -8.0, 8.0, 1e-12);
    CHECK(r.value == doctest::Approx(std::sqrt(3.14159265358979323846)).epsilon(1e-11));
}

TEST_CASE("integrable endpoint behaviour via subdivision") {
    // sqrt has unbounded derivative at 0; adaptive bisection still converges.
    QuadResult r = integrate([](double x) { return std::sqrt(x); }, 0.0, 1.0, 1e-12);
    CHECK(r.converged);
    CHECK(r.value == doctest::Approx(2.0 / 3.0).epsilon(1e-10));
}

TEST_CASE("error estimate bounds the true error on tame cases") {
    QuadResult r = integrate([](double x) { return 1.0 / (1.0 + x * x); }, 0.0, 1.0, 1e-10);
    double truth = std::atan(1.0);
    CHECK(std::abs(r.value - truth) <= std::max(r.error, 1e-13));
}

TEST_CASE("panel budget failure is reported, throwing variant throws") {
    // Integrable singularity at an irrational-ish point; 4 panels cannot
    // resolve it to 1e-14.
    auto spike = [](double x) { return 1.0 / std::sqrt(std::abs(x - 1.0 / 3.0)); };
    QuadResult r = integrate(spike, 0.0, 1.0, 1e-14, 0.0, 4);
    CHECK_FALSE(r.converged);
    CHECK_THROWS_AS(integrate_or_throw(spike, 0.0, 1.0, 1e-14, 0.0, 4), QuadratureError);
}

TEST_CASE("degenerate interval") {
    QuadResult r = integrate([](double) { return 42.0; }, 2.0, 2.0);
    CHECK(r.value == 0.0);
    CHECK(r.converged);
}
