#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "qh/curve.hpp"
#include "qh/types.hpp"

namespace qh {

/// Exact nonnegative rational with int64 parts, reduced, for squared
/// distance / gap ratios.  Comparisons cross-multiply in 128 bits; no
/// floating point decides an argmin.
struct Ratio64 {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Ratio64() = default;
    Ratio64(std::int64_t n, std::int64_t d) : num(n), den(d) {
        std::int64_t g = std::gcd(num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }

    friend bool operator==(const Ratio64& a, const Ratio64& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator<(const Ratio64& a, const Ratio64& b) {
        return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
    }
    friend bool operator>(const Ratio64& a, const Ratio64& b) { return b < a; }
    friend bool operator<=(const Ratio64& a, const Ratio64& b) { return !(b < a); }
    friend bool operator>=(const Ratio64& a, const Ratio64& b) { return !(a < b); }
};

/// One scanned pair m < n with its exact difference data.
struct PairRecord {
    std::int64_t m = 0;
    std::int64_t n = 0;
    Vec4i diff = Vec4i::Zero();     // S(n) - S(m)
    std::int64_t sq_dist = 0;       // ||diff||^2
    Ratio64 sq_ratio;               // sq_dist / (n - m)

    std::int64_t gap() const { return n - m; }
};

PairRecord make_pair_record(std::int64_t m, std::int64_t n, const Vec4i& diff);

/// Exhaustive minimum of ||S(n)-S(m)||^2 over d_lo < n-m <= d_hi,
/// 0 <= m < n <= n_max, with every attaining pair (ordered by (gap, m)).
///
/// Always brute force.  A 64-shift pruning accelerator was considered and
/// rejected: the shift law ||S(n+64j)-S(m+64j)|| = ||S(n)-S(m)|| holds for
/// pairs inside a single 16-block (check_shift_invariance(16, ...) is
/// true) but fails across block boundaries (||S(17)-S(1)||^2 = 16 while
/// ||S(81)-S(65)||^2 = 4), so one period does not determine all distances.
struct WindowResult {
    std::int64_t d_lo = 0, d_hi = 0, n_max = 0;
    std::int64_t min_sq_dist = 0;
    std::vector<PairRecord> argmins;
};

WindowResult window_min(std::int64_t d_lo, std::int64_t d_hi, std::int64_t n_max,
                        int threads = 1);

/// Exact rational extremes of ||S(n)-S(m)||^2 / (n-m) over all pairs with
/// n <= n_max, with every attaining pair.
struct RatioBounds {
    std::int64_t n_max = 0;
    Ratio64 min_sq_ratio, max_sq_ratio;
    std::vector<PairRecord> argmins, argmaxes;
};

RatioBounds ratio_bounds(std::int64_t n_max, int threads = 1);

/// The displayed table ||S(16n+m) - S(16n)||^2 for n in {0..3}, m in [-8,8],
/// its bounds (8 for odd n, 9 for even n), and the constant alpha from
/// 4(1-alpha) = (3 + sqrt2/2)(1 + 1/16 + 1/16^2 + ...).
struct LemmaOneEntry {
    int n = 0;
    int m = 0;
    std::int64_t sq_dist = 0;
};

struct LemmaOneResult {
    std::vector<LemmaOneEntry> table;
    bool bounds_ok = true;              // every entry within its row bound
    bool nine_only_at_odd_m = true;     // value 9 only at odd m
    std::vector<LemmaOneEntry> bound_equalities;  // entries equal to their row bound
    int depth_terms = 0;
    double alpha = 0.0;                 // from the truncated series
    double alpha_closed_form = 0.0;     // (3 - 2 sqrt2)/15
};

LemmaOneResult lemma_one(int depth_terms = 32);

/// Exhaustive check that ||S(n)-S(m)||^2 >= 4 whenever n - m >= A, n <= scan_max.
struct LemmaTwoResult {
    std::int64_t A = 0;
    std::int64_t scan_max = 0;
    bool pass = false;
    std::int64_t min_sq_dist = 0;
    std::vector<PairRecord> witnesses;  // pairs attaining the minimum
};

LemmaTwoResult lemma_two(std::int64_t A, std::int64_t scan_max, int threads = 1);

/// Derived quasi-helix constants: b_upper = 2(1+sqrt2) and
/// a_lower = 2 alpha / sqrt(2(A+1)) with A = 16.
struct HoelderConstants {
    double alpha = 0.0;
    std::int64_t A = 16;
    double a_lower = 0.0;
    double b_upper = 0.0;
    double b_upper_sq = 0.0;  // 12 + 8 sqrt2
};

HoelderConstants hoelder_constants();

/// Scan report around the conjectured extremes: whether any pair drops the
/// squared ratio below 1/5 or pushes it above 25/17 within n <= n_max.
/// Evidence only; asserts nothing.
struct ConjectureReport {
    std::int64_t n_max = 0;
    Ratio64 min_sq_ratio, max_sq_ratio;
    std::vector<PairRecord> argmins, argmaxes;
    bool one_fifth_beaten = false;      // min < 1/5
    bool beats_25_17_from_above = false;  // max > 25/17
};

ConjectureReport conjecture_scan(std::int64_t n_max, int threads = 1);

/// Every squared ratio is at most 12 + 8 sqrt2 (exact integer comparison of
/// sq_dist/gap <= 12 + 8 sqrt2 via (sq_dist - 12 gap)^2 <= 128 gap^2).
bool ratio_within_hoelder_bound(std::int64_t sq_dist, std::int64_t gap);

/// ||S(n+64j) - S(m+64j)|| = ||S(n) - S(m)|| for 0 <= m < n <= n_hi, j <= j_hi.
bool check_shift_invariance(std::int64_t n_hi = 16, std::int64_t j_hi = 64);

/// S(n+16j) - S(m+16j) = a_j (S(n+16 j0) - S(m+16 j0)), j0 = j mod 4,
/// for 0 <= m < n < 16, j <= j_hi (vector identity).
bool check_translation_law(std::int64_t j_hi = 64);

/// Representative of the 64-shift class of a pair: both indices shifted so
/// that m lands in [0, 64).
std::pair<std::int64_t, std::int64_t> canonical_shift_class(std::int64_t m, std::int64_t n);

}  // namespace qh
