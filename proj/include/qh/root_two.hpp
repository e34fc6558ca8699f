#pragma once

#include <cmath>
#include <ostream>
#include <string>

#include "qh/dyadic.hpp"

namespace qh {

/// Exact element a + b*sqrt(2) of the quadratic ring Z[sqrt(2)] with dyadic
/// coefficients.  Enough to state the sqrt(2)-bearing eigen identities
/// exactly instead of through floating point.
class RootTwo {
public:
    RootTwo() = default;
    RootTwo(std::int64_t a) : a_(a) {}  // NOLINT: implicit, it is a number type
    RootTwo(Dyadic a, Dyadic b) : a_(std::move(a)), b_(std::move(b)) {}

    static RootTwo sqrt2() { return RootTwo(Dyadic(0), Dyadic(1)); }

    const Dyadic& rational_part() const { return a_; }
    const Dyadic& sqrt2_part() const { return b_; }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    double to_double() const { return a_.to_double() + b_.to_double() * std::sqrt(2.0); }

    std::string str() const { return a_.str() + " + (" + b_.str() + ")*sqrt2"; }

    RootTwo operator-() const { return RootTwo(-a_, -b_); }

    friend RootTwo operator+(const RootTwo& x, const RootTwo& y) {
        return RootTwo(x.a_ + y.a_, x.b_ + y.b_);
    }
    friend RootTwo operator-(const RootTwo& x, const RootTwo& y) {
        return RootTwo(x.a_ - y.a_, x.b_ - y.b_);
    }
    friend RootTwo operator*(const RootTwo& x, const RootTwo& y) {
        // (a1 + b1 s)(a2 + b2 s) = a1 a2 + 2 b1 b2 + (a1 b2 + b1 a2) s
        return RootTwo(x.a_ * y.a_ + Dyadic(2) * (x.b_ * y.b_),
                       x.a_ * y.b_ + x.b_ * y.a_);
    }

    RootTwo& operator+=(const RootTwo& o) { *this = *this + o; return *this; }
    RootTwo& operator-=(const RootTwo& o) { *this = *this - o; return *this; }
    RootTwo& operator*=(const RootTwo& o) { *this = *this * o; return *this; }

    friend bool operator==(const RootTwo& x, const RootTwo& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const RootTwo& x, const RootTwo& y) { return !(x == y); }

private:
    Dyadic a_, b_;
};

inline std::string to_string(const RootTwo& v) { return v.str(); }

inline std::ostream& operator<<(std::ostream& os, const RootTwo& v) { return os << v.str(); }

}  // namespace qh
