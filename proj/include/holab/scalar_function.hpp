#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "holab/errors.hpp"
#include "holab/interval.hpp"

namespace holab {

/// Function value with exact first and second derivative at a point.
struct Jet2 {
    double v = 0.0;
    double d1 = 0.0;
    double d2 = 0.0;
};

/// Natural cubic spline through strictly increasing knots. C2 by
/// construction; the second derivative is piecewise linear between knots.
class CubicSpline {
public:
    CubicSpline() = default;
    explicit CubicSpline(std::vector<std::pair<double, double>> points);

    double x_min() const { return x_.front(); }
    double x_max() const { return x_.back(); }
    std::size_t segments() const { return x_.size() - 1; }

    Jet2 eval(double x) const;

    /// Evaluate the cubic of a specific segment, ignoring which segment x
    /// falls in. Used to check value/derivative continuity across knots.
    Jet2 eval_on_segment(std::size_t seg, double x) const;

private:
    std::size_t locate(double x) const;

    std::vector<double> x_, y_, m_; // knots, values, second derivatives
};

/// One-variable scalar function over an expression tape: constants,
/// arithmetic, powers, exp/log, hyperbolic and circular functions, and
/// tabulated data via natural cubic interpolation. Immutable after
/// construction; evaluation is thread-safe. Derivatives are exact
/// (forward-mode on the tape), not finite differences.
class ScalarFunction {
public:
    ScalarFunction() = default;

    /// Parse an infix expression such as "exp(t)", "sinh(r)", "t^(2/3)".
    /// The single free variable may have any identifier name.
    static ScalarFunction parse(const std::string& expr,
                                Interval domain = Interval::all());

    /// Build from sampled data; interpolation is a natural cubic spline and
    /// the function is flagged as interpolated. Domain is [x0, xN].
    static ScalarFunction cubic_table(std::vector<std::pair<double, double>> points);

    static ScalarFunction constant(double c);

    bool valid() const { return impl_ != nullptr; }
    const Interval& domain() const;
    const std::string& source() const;
    const std::string& variable() const;

    /// True when values come from a fitted table rather than a closed form;
    /// second-derivative sign tests on such functions are only as faithful
    /// as the interpolant.
    bool interpolated() const;

    /// Function value only (fast path; no derivative bookkeeping).
    double value(double x) const;

    /// Value and first derivative.
    std::pair<double, double> value_d1(double x) const;

    /// Value, first and second derivative.
    Jet2 jet(double x) const;

private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
};

/// Value + first/second derivative at x (forward-mode along the tape).
/// Throws DomainError outside the domain, NonFiniteError on overflow.
Jet2 eval_jet2(const ScalarFunction& fn, double x);

/// (log f)''(x) = f''/f - (f'/f)^2. Requires f(x) > 0.
double log_second_derivative(const ScalarFunction& fn, double x);

/// Hubble-style logarithmic derivative f'(x)/f(x). Requires f(x) > 0.
double hubble(const ScalarFunction& fn, double x);

} // namespace holab
