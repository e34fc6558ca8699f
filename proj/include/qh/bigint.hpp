#pragma once

#include <cstdint>
#include <cstdlib>
#include <cmath>
#include <compare>
#include <limits>
#include <stdexcept>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace qh {

/// Arbitrary-precision signed integer, sign-magnitude over base-2^32 limbs.
///
/// Supports exactly the operations the exact-arithmetic layer needs:
/// add/sub/mul, bit shifts, comparisons, divmod by a small divisor (for
/// base conversion) and decimal I/O.  There is deliberately no general
/// big/big division; ratios are compared by cross-multiplication.
class Int {
public:
    Int() = default;

    Int(std::int64_t v) {  // NOLINT: implicit by design, it is a number type
        if (v == 0) return;
        sign_ = v < 0 ? -1 : 1;
        // avoid UB on INT64_MIN
        std::uint64_t mag = v < 0 ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
        push_u64(mag);
    }

    static Int from_u64(std::uint64_t mag) {
        Int r;
        if (mag) { r.sign_ = 1; r.push_u64(mag); }
        return r;
    }

    /// Parse a decimal string, with optional leading '-' or '+'.
    static Int from_string(std::string_view s) {
        if (s.empty()) throw std::invalid_argument("Int: empty string");
        int sgn = 1;
        if (s.front() == '-' || s.front() == '+') {
            sgn = s.front() == '-' ? -1 : 1;
            s.remove_prefix(1);
        }
        if (s.empty()) throw std::invalid_argument("Int: no digits");
        Int r;
        for (char c : s) {
            if (c < '0' || c > '9') throw std::invalid_argument("Int: bad digit");
            r.mul_small_inplace(10);
            r.add_small_inplace(static_cast<std::uint32_t>(c - '0'));
        }
        r.sign_ = r.limbs_.empty() ? 0 : sgn;
        return r;
    }

    bool is_zero() const { return sign_ == 0; }
    bool is_negative() const { return sign_ < 0; }
    bool is_even() const { return limbs_.empty() || (limbs_[0] & 1u) == 0; }
    bool is_odd() const { return !is_even(); }
    int signum() const { return sign_; }

    /// Number of significant bits of the magnitude (0 for zero).
    std::size_t bit_length() const {
        if (limbs_.empty()) return 0;
        std::uint32_t top = limbs_.back();
        std::size_t bits = (limbs_.size() - 1) * 32;
        while (top) { ++bits; top >>= 1; }
        return bits;
    }

    /// Trailing zero bits of the magnitude; 0 for zero.
    std::size_t trailing_zero_bits() const {
        if (limbs_.empty()) return 0;
        std::size_t i = 0;
        while (limbs_[i] == 0) ++i;
        std::uint32_t v = limbs_[i];
        std::size_t bits = i * 32;
        while ((v & 1u) == 0) { ++bits; v >>= 1; }
        return bits;
    }

    bool fits_int64() const {
        if (limbs_.size() > 2) return false;
        std::uint64_t mag = to_u64_mag();
        if (sign_ >= 0) return mag <= static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max());
        return mag <= static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()) + 1;
    }

    std::int64_t to_int64() const {
        if (!fits_int64()) throw std::overflow_error("Int: does not fit int64");
        std::uint64_t mag = to_u64_mag();
        return sign_ < 0 ? -static_cast<std::int64_t>(mag - 1) - 1 : static_cast<std::int64_t>(mag);
    }

    double to_double() const {
        if (limbs_.empty()) return 0.0;
        double acc = 0.0;
        // top three limbs carry more than a double's mantissa
        std::size_t n = limbs_.size();
        std::size_t lo = n > 3 ? n - 3 : 0;
        for (std::size_t i = n; i-- > lo;) acc = acc * 4294967296.0 + limbs_[i];
        double r = std::ldexp(acc, static_cast<int>(32 * lo));
        return sign_ < 0 ? -r : r;
    }

    std::string str() const {
        if (is_zero()) return "0";
        Int tmp = *this;
        std::string out;
        while (!tmp.is_zero()) {
            std::uint32_t rem = tmp.divmod_small_inplace(1000000000u);
            std::string chunk = std::to_string(rem);
            if (!tmp.is_zero()) chunk.insert(0, 9 - chunk.size(), '0');
            out.insert(0, chunk);
        }
        if (sign_ < 0) out.insert(0, 1, '-');
        return out;
    }

    Int operator-() const {
        Int r = *this;
        r.sign_ = -r.sign_;
        return r;
    }

    Int& operator+=(const Int& o) {
        if (o.sign_ == 0) return *this;
        if (sign_ == 0) { *this = o; return *this; }
        if (sign_ == o.sign_) {
            add_mag(limbs_, o.limbs_);
        } else {
            int c = cmp_mag(limbs_, o.limbs_);
            if (c == 0) { limbs_.clear(); sign_ = 0; }
            else if (c > 0) sub_mag(limbs_, o.limbs_);
            else {
                std::vector<std::uint32_t> tmp = o.limbs_;
                sub_mag(tmp, limbs_);
                limbs_ = std::move(tmp);
                sign_ = o.sign_;
            }
        }
        return *this;
    }

    Int& operator-=(const Int& o) {
        Int t = o;
        t.sign_ = -t.sign_;
        return *this += t;
    }

    friend Int operator+(Int a, const Int& b) { a += b; return a; }
    friend Int operator-(Int a, const Int& b) { a -= b; return a; }

    friend Int operator*(const Int& a, const Int& b) {
        Int r;
        if (a.sign_ == 0 || b.sign_ == 0) return r;
        r.sign_ = a.sign_ * b.sign_;
        r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
        for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
            std::uint64_t carry = 0;
            std::uint64_t ai = a.limbs_[i];
            for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
                std::uint64_t cur = r.limbs_[i + j] + ai * b.limbs_[j] + carry;
                r.limbs_[i + j] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
            }
            std::size_t k = i + b.limbs_.size();
            while (carry) {
                std::uint64_t cur = r.limbs_[k] + carry;
                r.limbs_[k] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
                ++k;
            }
        }
        r.trim();
        return r;
    }

    Int& operator*=(const Int& o) { *this = *this * o; return *this; }

    /// Magnitude shift left (value * 2^k, sign preserved).
    Int operator<<(std::size_t k) const {
        if (is_zero() || k == 0) return *this;
        Int r;
        r.sign_ = sign_;
        std::size_t limb_shift = k / 32, bit_shift = k % 32;
        r.limbs_.assign(limbs_.size() + limb_shift + 1, 0);
        for (std::size_t i = 0; i < limbs_.size(); ++i) {
            std::uint64_t v = static_cast<std::uint64_t>(limbs_[i]) << bit_shift;
            r.limbs_[i + limb_shift] |= static_cast<std::uint32_t>(v);
            r.limbs_[i + limb_shift + 1] |= static_cast<std::uint32_t>(v >> 32);
        }
        r.trim();
        return r;
    }

    /// Magnitude shift right (truncates toward zero; exact when 2^k divides).
    Int operator>>(std::size_t k) const {
        if (is_zero() || k == 0) return *this;
        std::size_t limb_shift = k / 32, bit_shift = k % 32;
        if (limb_shift >= limbs_.size()) return Int();
        Int r;
        r.limbs_.assign(limbs_.size() - limb_shift, 0);
        for (std::size_t i = 0; i < r.limbs_.size(); ++i) {
            std::uint64_t v = limbs_[i + limb_shift];
            if (bit_shift) {
                v >>= bit_shift;
                if (i + limb_shift + 1 < limbs_.size())
                    v |= static_cast<std::uint64_t>(limbs_[i + limb_shift + 1]) << (32 - bit_shift);
            }
            r.limbs_[i] = static_cast<std::uint32_t>(v);
        }
        r.trim();
        r.sign_ = r.limbs_.empty() ? 0 : sign_;
        return r;
    }

    /// Divide by a small positive divisor; returns the remainder of the
    /// magnitude division (quotient truncates toward zero).
    std::uint32_t divmod_small_inplace(std::uint32_t d) {
        if (d == 0) throw std::domain_error("Int: division by zero");
        std::uint64_t rem = 0;
        for (std::size_t i = limbs_.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | limbs_[i];
            limbs_[i] = static_cast<std::uint32_t>(cur / d);
            rem = cur % d;
        }
        trim();
        if (limbs_.empty()) sign_ = 0;
        return static_cast<std::uint32_t>(rem);
    }

    friend bool operator==(const Int& a, const Int& b) {
        return a.sign_ == b.sign_ && a.limbs_ == b.limbs_;
    }
    friend bool operator!=(const Int& a, const Int& b) { return !(a == b); }
    friend bool operator<(const Int& a, const Int& b) {
        if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
        int c = cmp_mag(a.limbs_, b.limbs_);
        return a.sign_ >= 0 ? c < 0 : c > 0;
    }
    friend bool operator>(const Int& a, const Int& b) { return b < a; }
    friend bool operator<=(const Int& a, const Int& b) { return !(b < a); }
    friend bool operator>=(const Int& a, const Int& b) { return !(a < b); }

    Int abs() const {
        Int r = *this;
        if (r.sign_ < 0) r.sign_ = 1;
        return r;
    }

private:
    int sign_ = 0;                       // -1, 0, +1
    std::vector<std::uint32_t> limbs_;   // little-endian, no leading zeros

    void push_u64(std::uint64_t v) {
        limbs_.push_back(static_cast<std::uint32_t>(v));
        if (v >> 32) limbs_.push_back(static_cast<std::uint32_t>(v >> 32));
    }

    std::uint64_t to_u64_mag() const {
        std::uint64_t mag = 0;
        if (limbs_.size() > 1) mag = static_cast<std::uint64_t>(limbs_[1]) << 32;
        if (!limbs_.empty()) mag |= limbs_[0];
        return mag;
    }

    void trim() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    }

    void mul_small_inplace(std::uint32_t f) {
        std::uint64_t carry = 0;
        for (auto& l : limbs_) {
            std::uint64_t cur = static_cast<std::uint64_t>(l) * f + carry;
            l = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
        trim();
        if (limbs_.empty()) sign_ = 0;
        else if (sign_ == 0) sign_ = 1;
    }

    void add_small_inplace(std::uint32_t v) {
        if (v == 0) return;
        if (sign_ < 0) throw std::logic_error("Int: add_small on negative");
        std::uint64_t carry = v;
        for (std::size_t i = 0; carry && i < limbs_.size(); ++i) {
            std::uint64_t cur = limbs_[i] + carry;
            limbs_[i] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
        sign_ = 1;
    }

    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    // a += b on magnitudes
    static void add_mag(std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        if (a.size() < b.size()) a.resize(b.size(), 0);
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < b.size(); ++i) {
            std::uint64_t cur = static_cast<std::uint64_t>(a[i]) + b[i] + carry;
            a[i] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        for (std::size_t i = b.size(); carry && i < a.size(); ++i) {
            std::uint64_t cur = static_cast<std::uint64_t>(a[i]) + carry;
            a[i] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) a.push_back(static_cast<std::uint32_t>(carry));
    }

    // a -= b on magnitudes, requires a >= b
    static void sub_mag(std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::int64_t cur = static_cast<std::int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
            if (cur < 0) { cur += (1LL << 32); borrow = 1; } else borrow = 0;
            a[i] = static_cast<std::uint32_t>(cur);
        }
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
};

inline std::string to_string(const Int& v) { return v.str(); }

inline std::ostream& operator<<(std::ostream& os, const Int& v) { return os << v.str(); }

}  // namespace qh
