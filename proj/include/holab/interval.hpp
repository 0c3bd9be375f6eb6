#pragma once

#include <limits>

namespace holab {

/// Real interval with optionally open or infinite endpoints.
struct Interval {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    bool lo_open = false;
    bool hi_open = false;

    static Interval all() { return {}; }

    static Interval closed(double a, double b) { return {a, b, false, false}; }

    static Interval open(double a, double b) { return {a, b, true, true}; }

    /// [a, +inf) or (a, +inf)
    static Interval from(double a, bool open_end = false) {
        return {a, std::numeric_limits<double>::infinity(), open_end, true};
    }

    bool contains(double x) const {
        if (x < lo || (lo_open && x == lo)) return false;
        if (x > hi || (hi_open && x == hi)) return false;
        return true;
    }

    bool bounded() const {
        return lo > -std::numeric_limits<double>::infinity() &&
               hi < std::numeric_limits<double>::infinity();
    }
};

} // namespace holab
