#include "doctest.h"

#include <cmath>
#include <vector>

#include "holab/scalar_function.hpp"

using namespace holab;

namespace {

// Golden-ratio low-discrepancy sequence over [lo, hi].
std::vector<double> quasi_points(double lo, double hi, int n) {
    std::vector<double> pts;
    double u = 0.5;
    for (int i = 0; i < n; ++i) {
        u += 0.6180339887498949;
        u -= std::floor(u);
        pts.push_back(lo + (hi - lo) * u);
    }
    return pts;
}

void check_against_fd(const ScalarFunction& f, double lo, double hi) {
    for (double x : quasi_points(lo, hi, 100)) {
        double h = 1e-5 * std::max(1.0, std::abs(x));
        Jet2 j = f.jet(x);
        double fp = f.value(x + h), fm = f.value(x - h), f0 = f.value(x);
        double fd1 = (fp - fm) / (2.0 * h);
        double fd2 = (fp - 2.0 * f0 + fm) / (h * h);
        double scale = std::max({1.0, std::abs(j.v), std::abs(j.d1), std::abs(j.d2)});
        CHECK(std::abs(j.d1 - fd1) <= 1e-6 * scale);
        CHECK(std::abs(j.d2 - fd2) <= 2e-5 * scale);
    }
}

} // namespace

TEST_CASE("jet values of the library functions") {
    CHECK(ScalarFunction::parse("exp(t)").jet(0.0).v == doctest::Approx(1.0));
    Jet2 e = ScalarFunction::parse("exp(t)").jet(0.0);
    CHECK(e.v == doctest::Approx(1.0));
    CHECK(e.d1 == doctest::Approx(1.0));
    CHECK(e.d2 == doctest::Approx(1.0));

    Jet2 s = ScalarFunction::parse("sinh(x)").jet(0.0);
    CHECK(s.v == doctest::Approx(0.0));
    CHECK(s.d1 == doctest::Approx(1.0));
    CHECK(s.d2 == doctest::Approx(0.0));

    Jet2 cube = ScalarFunction::parse("r^3").jet(2.0);
    CHECK(cube.v == doctest::Approx(8.0));
    CHECK(cube.d1 == doctest::Approx(12.0));
    CHECK(cube.d2 == doctest::Approx(12.0));
}

TEST_CASE("log second derivative") {
    CHECK(log_second_derivative(ScalarFunction::parse("exp(t)"), 5.0) ==
          doctest::Approx(0.0).epsilon(1e-12));
    CHECK(log_second_derivative(ScalarFunction::parse("t"), 2.0) == doctest::Approx(-0.25));
    CHECK(log_second_derivative(ScalarFunction::parse("cosh(t)"), 0.0) == doctest::Approx(1.0));
    CHECK_THROWS_AS(log_second_derivative(ScalarFunction::parse("t"), -1.0), DomainError);
}

TEST_CASE("hubble function f'/f") {
    CHECK(hubble(ScalarFunction::parse("exp(t)"), 3.0) == doctest::Approx(1.0));
    CHECK(hubble(ScalarFunction::parse("t^(2/3)"), 1.0) == doctest::Approx(2.0 / 3.0));
    CHECK(hubble(ScalarFunction::constant(5.0), 0.0) == doctest::Approx(0.0));
    CHECK_THROWS_AS(hubble(ScalarFunction::parse("t"), 0.0), DomainError);
}

TEST_CASE("exact derivatives match central finite differences per node type") {
    check_against_fd(ScalarFunction::parse("exp(x)"), -3.0, 3.0);
    check_against_fd(ScalarFunction::parse("log(x)"), 0.2, 5.0);
    check_against_fd(ScalarFunction::parse("sinh(x)"), -3.0, 3.0);
    check_against_fd(ScalarFunction::parse("cosh(x)"), -3.0, 3.0);
    check_against_fd(ScalarFunction::parse("tanh(x)"), -3.0, 3.0);
    check_against_fd(ScalarFunction::parse("sin(x)"), -3.0, 3.0);
    check_against_fd(ScalarFunction::parse("cos(x)"), -3.0, 3.0);
    check_against_fd(ScalarFunction::parse("x^(2/3)"), 0.3, 5.0);
    check_against_fd(ScalarFunction::parse("x^4"), -2.0, 2.0);
    check_against_fd(ScalarFunction::parse("(x*x + 1)/(x - 4)"), -3.0, 3.0);
    check_against_fd(ScalarFunction::parse("sqrt(x + 4)"), -2.0, 3.0);
    check_against_fd(ScalarFunction::parse("2^x"), -2.0, 2.0);
    check_against_fd(ScalarFunction::parse("sinh(2*x)/2 - x*cos(x)"), -2.0, 2.0);
}

TEST_CASE("variable exponent powers") {
    // x^x = exp(x log x)
    ScalarFunction f = ScalarFunction::parse("x^x");
    double x = 1.7;
    double v = std::pow(x, x);
    Jet2 j = f.jet(x);
    CHECK(j.v == doctest::Approx(v));
    CHECK(j.d1 == doctest::Approx(v * (std::log(x) + 1.0)));
    check_against_fd(f, 0.5, 3.0);
}

TEST_CASE("parser rejects malformed input") {
    CHECK_THROWS_AS(ScalarFunction::parse("exp("), ParseError);
    CHECK_THROWS_AS(ScalarFunction::parse("t + * 2"), ParseError);
    CHECK_THROWS_AS(ScalarFunction::parse("t + s"), ParseError); // two variables
    CHECK_THROWS_AS(ScalarFunction::parse("frob(t)"), ParseError);
    CHECK_THROWS_AS(ScalarFunction::parse(""), ParseError);
    CHECK_THROWS_AS(ScalarFunction::parse("(t"), ParseError);
}

TEST_CASE("declared domain is enforced") {
    ScalarFunction f = ScalarFunction::parse("t^(1/2)", Interval::from(0.0));
    CHECK(f.value(4.0) == doctest::Approx(2.0));
    CHECK_THROWS_AS(f.value(-1.0), DomainError);
}

TEST_CASE("division by zero and log domain raise instead of propagating NaN") {
    CHECK_THROWS_AS(ScalarFunction::parse("1/x").value(0.0), DomainError);
    CHECK_THROWS_AS(ScalarFunction::parse("log(x)").value(-2.0), DomainError);
    CHECK_THROWS_AS(ScalarFunction::parse("log(x)").jet(0.0), DomainError);
}

TEST_CASE("overflow is signalled, graceful underflow is not") {
    // exp overflows around 710; the value path must throw on NaN combinations
    // but a clean 1/huge underflow to zero is legitimate.
    CHECK(ScalarFunction::parse("1/exp(x)").value(800.0) == 0.0);
    CHECK_THROWS_AS(ScalarFunction::parse("exp(x) - exp(x + 1)").value(800.0), NonFiniteError);
    CHECK_THROWS_AS(ScalarFunction::parse("exp(x)").jet(800.0), NonFiniteError);
}

TEST_CASE("cubic table interpolates and differentiates") {
    // Samples of x^2 on [0, 4]; natural spline reproduces interior values well.
    std::vector<std::pair<double, double>> pts;
    for (int i = 0; i <= 16; ++i) {
        double x = 0.25 * i;
        pts.emplace_back(x, x * x);
    }
    ScalarFunction f = ScalarFunction::cubic_table(pts);
    CHECK(f.interpolated());
    CHECK(f.value(1.1) == doctest::Approx(1.21).epsilon(1e-3));
    CHECK(f.jet(2.3).d1 == doctest::Approx(4.6).epsilon(1e-2));
    CHECK_THROWS_AS(f.value(5.0), DomainError);
    CHECK_THROWS_AS(f.value(-0.5), DomainError);
}

TEST_CASE("cubic table is continuous in value and slope at every knot") {
    std::vector<std::pair<double, double>> pts = {
        {0.0, 0.0}, {0.7, 1.3}, {1.1, 0.4}, {2.0, 2.2}, {3.5, 1.9}, {4.0, 5.0}};
    CubicSpline sp(pts);
    for (std::size_t k = 1; k < pts.size() - 1; ++k) {
        double xk = pts[k].first;
        Jet2 left = sp.eval_on_segment(k - 1, xk);
        Jet2 right = sp.eval_on_segment(k, xk);
        CHECK(std::abs(left.v - right.v) <= 1e-12);
        CHECK(std::abs(left.d1 - right.d1) <= 1e-12);
        // natural spline: second derivative is continuous too
        CHECK(std::abs(left.d2 - right.d2) <= 1e-10);
    }
}

TEST_CASE("table jets match finite differences") {
    std::vector<std::pair<double, double>> pts;
    for (int i = 0; i <= 40; ++i) {
        double x = 0.1 * i;
        pts.emplace_back(x, std::sin(x) + 0.3 * x);
    }
    check_against_fd(ScalarFunction::cubic_table(pts), 0.2, 3.8);
}

TEST_CASE("constants pi and e") {
    CHECK(ScalarFunction::parse("pi").value(0.0) == doctest::Approx(3.14159265358979));
    CHECK(ScalarFunction::parse("2*e").value(0.0) == doctest::Approx(5.43656365691809));
}
