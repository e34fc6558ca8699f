#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <ostream>
#include <string>

#include "qh/bigint.hpp"

namespace qh {

/// Exact dyadic rational num / 2^exp.
///
/// Canonical form: exp == 0, or num is odd (zero is stored as 0/2^0).
class Dyadic {
public:
    Dyadic() = default;
    Dyadic(std::int64_t v) : num_(v) {}  // NOLINT: implicit, it is a number type
    Dyadic(Int num, std::uint32_t exp) : num_(std::move(num)), exp_(exp) { canonicalize(); }

    static Dyadic half() { return Dyadic(1, 1); }

    /// Exact value of a finite double (every finite double is dyadic).
    static Dyadic from_double(double v) {
        if (!std::isfinite(v)) throw std::invalid_argument("Dyadic: non-finite double");
        if (v == 0.0) return Dyadic();
        int e = 0;
        double m = std::frexp(v, &e);              // v = m * 2^e, 0.5 <= |m| < 1
        auto mant = static_cast<std::int64_t>(std::ldexp(m, 53));
        e -= 53;
        Dyadic r(mant);
        if (e >= 0) r.num_ = r.num_ << static_cast<std::size_t>(e);
        else r.exp_ = static_cast<std::uint32_t>(-e);
        r.canonicalize();
        return r;
    }

    const Int& numerator() const { return num_; }
    std::uint32_t exponent() const { return exp_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_negative() const { return num_.is_negative(); }
    bool is_integer() const { return exp_ == 0; }
    int signum() const { return num_.signum(); }

    double to_double() const { return std::ldexp(num_.to_double(), -static_cast<int>(exp_)); }

    std::string str() const {
        if (exp_ == 0) return num_.str();
        return num_.str() + "/2^" + std::to_string(exp_);
    }

    Dyadic operator-() const {
        Dyadic r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend Dyadic operator+(const Dyadic& a, const Dyadic& b) {
        std::uint32_t e = std::max(a.exp_, b.exp_);
        Dyadic r;
        r.num_ = (a.num_ << (e - a.exp_)) + (b.num_ << (e - b.exp_));
        r.exp_ = e;
        r.canonicalize();
        return r;
    }
    friend Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }
    friend Dyadic operator*(const Dyadic& a, const Dyadic& b) {
        Dyadic r;
        r.num_ = a.num_ * b.num_;
        r.exp_ = a.exp_ + b.exp_;
        r.canonicalize();
        return r;
    }

    Dyadic& operator+=(const Dyadic& o) { *this = *this + o; return *this; }
    Dyadic& operator-=(const Dyadic& o) { *this = *this - o; return *this; }
    Dyadic& operator*=(const Dyadic& o) { *this = *this * o; return *this; }

    friend bool operator==(const Dyadic& a, const Dyadic& b) {
        return a.exp_ == b.exp_ && a.num_ == b.num_;   // canonical form
    }
    friend bool operator!=(const Dyadic& a, const Dyadic& b) { return !(a == b); }
    friend bool operator<(const Dyadic& a, const Dyadic& b) {
        std::uint32_t e = std::max(a.exp_, b.exp_);
        return (a.num_ << (e - a.exp_)) < (b.num_ << (e - b.exp_));
    }
    friend bool operator>(const Dyadic& a, const Dyadic& b) { return b < a; }
    friend bool operator<=(const Dyadic& a, const Dyadic& b) { return !(b < a); }
    friend bool operator>=(const Dyadic& a, const Dyadic& b) { return !(a < b); }

private:
    Int num_;
    std::uint32_t exp_ = 0;

    void canonicalize() {
        if (num_.is_zero()) { exp_ = 0; return; }
        if (exp_ == 0) return;
        std::size_t tz = num_.trailing_zero_bits();
        std::size_t k = std::min<std::size_t>(tz, exp_);
        if (k) {
            num_ = num_ >> k;
            exp_ -= static_cast<std::uint32_t>(k);
        }
    }
};

inline std::string to_string(const Dyadic& v) { return v.str(); }

inline std::ostream& operator<<(std::ostream& os, const Dyadic& v) { return os << v.str(); }

}  // namespace qh
