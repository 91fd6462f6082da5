#pragma once

#include <charconv>
#include <cmath>
#include <optional>
#include <ostream>
#include <string>

#include "emsum/rational.hpp"

namespace emsum {

// Shortest decimal that round-trips to the same double.
inline std::string format_double(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

// A numeric result that is exact when the whole computation path was exact,
// and a double otherwise.  The double view is always populated.
struct Scalar {
    double value = 0.0;
    std::optional<Rational> exact;

    Scalar() = default;
    Scalar(double v) : value(v) {}  // NOLINT
    Scalar(const Rational& r) : value(r.to_double()), exact(r) {}  // NOLINT

    bool is_exact() const { return exact.has_value(); }

    Scalar& operator+=(const Scalar& o) {
        if (exact && o.exact) {
            *exact += *o.exact;
            value = exact->to_double();
        } else {
            exact.reset();
            value += o.value;
        }
        return *this;
    }
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }

    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        if (a.exact && b.exact) return Scalar(*a.exact - *b.exact);
        return Scalar(a.value - b.value);
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        if (a.exact && b.exact) return Scalar(*a.exact * *b.exact);
        return Scalar(a.value * b.value);
    }

    Scalar abs() const {
        if (exact) return Scalar(exact->abs());
        return Scalar(std::abs(value));
    }

    // "p/q" when exact, shortest round-trip decimal otherwise.
    std::string to_string() const {
        if (exact) return exact->to_string();
        return format_double(value);
    }

    friend std::ostream& operator<<(std::ostream& os, const Scalar& s) {
        return os << s.to_string();
    }
};

}  // namespace emsum
