#pragma once

#include <cstdint>
#include <vector>

#include "qh/algebra.hpp"
#include "qh/sequence.hpp"
#include "qh/types.hpp"

namespace qh {

/// Hölder upper constant 2(1+sqrt2): ||S(t)-S(s)|| <= kHoelderUpper sqrt|t-s|.
inline const double kHoelderUpper = 2.0 * (1.0 + 1.4142135623730950488);
inline const double kHoelderUpperSq = 12.0 + 8.0 * 1.4142135623730950488;

/// Partial sum S(n) = sum_{j<n} a_j u_{j mod 4}, computed from the base-4
/// digits of n in O(digits) exact arithmetic via S(4m+c) = M S(m) + tail.
Vec4z partial_sum(const Int& n);

/// Fixed-width fast path (n <= 4^15).
Vec4i partial_sum64(std::int64_t n);

/// Streams S(0), S(1), S(2), ... in amortized O(1) per step.
class SumStream {
public:
    SumStream() = default;

    std::int64_t index() const { return signs_.index(); }

    /// Returns S(index) and advances the stream by one step.
    Vec4i next() {
        Vec4i out = value_;
        std::int64_t i = signs_.index();
        value_[static_cast<int>(i & 3)] += signs_.next();
        return out;
    }

private:
    SignStream signs_;
    Vec4i value_ = Vec4i::Zero();
};

/// Exact evaluation at a nonnegative dyadic parameter p/2^k:
/// S(p/2^k) = T^{-k} S(p).  Agrees with partial_sum at integers and
/// satisfies S(2t) = T S(t), S(4t) = M S(t), S(16t) = 4 S(t) exactly.
Vec4dy eval_dyadic(const Dyadic& t);

/// Evaluation at an arbitrary nonnegative real within tol, resolving t to
/// k = ceil(2 log2(kHoelderUpper/tol)) binary digits; the Hölder bound turns
/// the parameter rounding into a value bound.  Throws std::invalid_argument
/// when t < 0, tol <= 0, or the required resolution exceeds what the double
/// argument can express.
Vec4d eval_real(double t, double tol);

/// Exact check of the arc isometry
/// S(t+j) - S(s+j) = a_j (S(t+j0) - S(s+j0)), j0 = j mod 4,
/// at `samples` deterministic dyadic pairs (s, t) in (0,1).
struct ArcIsometryReport {
    std::int64_t j = 0;
    int j0 = 0;
    int sign = 1;
    int samples = 0;
    bool ok = true;
    Dyadic witness_s, witness_t;  // first failing pair when !ok
};

ArcIsometryReport check_arc_isometry(std::int64_t j, int samples);

/// Scan of the first coordinate S_0(n) for n in [0, limit].
struct FirstCoordinateScan {
    std::int64_t limit = 0;
    std::int64_t min_value = 0;
    std::vector<std::int64_t> argmin;
};

FirstCoordinateScan first_coordinate_min(std::int64_t limit);

}  // namespace qh
