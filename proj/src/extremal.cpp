#include "qh/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qh/parallel.hpp"

namespace qh {

namespace {

constexpr std::int64_t kQuadraticScanLimit = 1 << 15;

std::vector<Vec4i> prefix_points(std::int64_t n_max) {
    std::vector<Vec4i> pts(static_cast<std::size_t>(n_max) + 1);
    SumStream stream;
    for (std::int64_t n = 0; n <= n_max; ++n) pts[static_cast<std::size_t>(n)] = stream.next();
    return pts;
}

std::int64_t sq_dist(const Vec4i& a, const Vec4i& b) {
    std::int64_t s = 0;
    for (int k = 0; k < 4; ++k) {
        std::int64_t d = b[k] - a[k];
        s += d * d;
    }
    return s;
}

void sort_pairs(std::vector<PairRecord>& v) {
    std::sort(v.begin(), v.end(), [](const PairRecord& a, const PairRecord& b) {
        if (a.gap() != b.gap()) return a.gap() < b.gap();
        return a.m < b.m;
    });
}

struct MinAccum {
    std::int64_t best = -1;
    std::vector<PairRecord> ties;

    void offer(std::int64_t val, std::int64_t m, std::int64_t n, const std::vector<Vec4i>& pts) {
        if (best >= 0 && val > best) return;
        if (best < 0 || val < best) {
            best = val;
            ties.clear();
        }
        ties.push_back(make_pair_record(m, n, pts[static_cast<std::size_t>(n)] -
                                                  pts[static_cast<std::size_t>(m)]));
    }

    static MinAccum merge(MinAccum a, MinAccum b) {
        if (b.best < 0) return a;
        if (a.best < 0 || b.best < a.best) return b;
        if (a.best < b.best) return a;
        a.ties.insert(a.ties.end(), b.ties.begin(), b.ties.end());
        return a;
    }
};

}  // namespace

PairRecord make_pair_record(std::int64_t m, std::int64_t n, const Vec4i& diff) {
    PairRecord r;
    r.m = m;
    r.n = n;
    r.diff = diff;
    r.sq_dist = diff.squaredNorm();
    r.sq_ratio = Ratio64(r.sq_dist, n - m);
    return r;
}

WindowResult window_min(std::int64_t d_lo, std::int64_t d_hi, std::int64_t n_max, int threads) {
    if (d_lo < 0 || d_lo >= d_hi || d_hi > n_max)
        throw std::invalid_argument("window_min: need 0 <= d_lo < d_hi <= n_max");
    if (n_max > (std::int64_t(1) << 22))
        throw std::invalid_argument("window_min: n_max too large for the desk-scale scan");
    auto pts = prefix_points(n_max);

    auto work = [&](std::int64_t lo, std::int64_t hi) {
        MinAccum acc;
        for (std::int64_t n = lo; n < hi; ++n)
            for (std::int64_t g = d_lo + 1; g <= d_hi && g <= n; ++g)
                acc.offer(sq_dist(pts[static_cast<std::size_t>(n - g)],
                                  pts[static_cast<std::size_t>(n)]),
                          n - g, n, pts);
        return acc;
    };
    MinAccum acc = detail::parallel_ranges<MinAccum>(1, n_max + 1, threads, work, MinAccum::merge);

    WindowResult res;
    res.d_lo = d_lo;
    res.d_hi = d_hi;
    res.n_max = n_max;
    res.min_sq_dist = acc.best;
    res.argmins = std::move(acc.ties);
    sort_pairs(res.argmins);
    return res;
}

namespace {

struct RatioAccum {
    Ratio64 min{-1, 1}, max{-1, 1};
    std::vector<PairRecord> mins, maxes;

    void offer(std::int64_t sq, std::int64_t gap, std::int64_t m, std::int64_t n,
               const std::vector<Vec4i>& pts) {
        Ratio64 r(sq, gap);
        bool new_min = min.num < 0 || r < min;
        bool new_max = max.num < 0 || r > max;
        if (new_min) { min = r; mins.clear(); }
        if (r == min)
            mins.push_back(make_pair_record(m, n, pts[static_cast<std::size_t>(n)] -
                                                      pts[static_cast<std::size_t>(m)]));
        if (new_max) { max = r; maxes.clear(); }
        if (r == max)
            maxes.push_back(make_pair_record(m, n, pts[static_cast<std::size_t>(n)] -
                                                       pts[static_cast<std::size_t>(m)]));
    }

    static RatioAccum merge(RatioAccum a, RatioAccum b) {
        if (b.min.num < 0) return a;
        if (a.min.num < 0) return b;
        RatioAccum out = std::move(a);
        if (b.min < out.min) { out.min = b.min; out.mins = std::move(b.mins); }
        else if (b.min == out.min)
            out.mins.insert(out.mins.end(), b.mins.begin(), b.mins.end());
        if (b.max > out.max) { out.max = b.max; out.maxes = std::move(b.maxes); }
        else if (b.max == out.max)
            out.maxes.insert(out.maxes.end(), b.maxes.begin(), b.maxes.end());
        return out;
    }
};

}  // namespace

RatioBounds ratio_bounds(std::int64_t n_max, int threads) {
    if (n_max < 2) throw std::invalid_argument("ratio_bounds: n_max must be >= 2");
    if (n_max > kQuadraticScanLimit)
        throw std::invalid_argument("ratio_bounds: n_max too large for the all-pairs scan");
    auto pts = prefix_points(n_max);

    auto work = [&](std::int64_t lo, std::int64_t hi) {
        RatioAccum acc;
        for (std::int64_t n = lo; n < hi; ++n)
            for (std::int64_t m = 0; m < n; ++m)
                acc.offer(sq_dist(pts[static_cast<std::size_t>(m)],
                                  pts[static_cast<std::size_t>(n)]),
                          n - m, m, n, pts);
        return acc;
    };
    RatioAccum acc =
        detail::parallel_ranges<RatioAccum>(1, n_max + 1, threads, work, RatioAccum::merge);

    RatioBounds res;
    res.n_max = n_max;
    res.min_sq_ratio = acc.min;
    res.max_sq_ratio = acc.max;
    res.argmins = std::move(acc.mins);
    res.argmaxes = std::move(acc.maxes);
    sort_pairs(res.argmins);
    sort_pairs(res.argmaxes);
    return res;
}

LemmaOneResult lemma_one(int depth_terms) {
    if (depth_terms < 1) throw std::invalid_argument("lemma_one: depth_terms must be >= 1");
    LemmaOneResult res;
    res.depth_terms = depth_terms;
    auto pts = prefix_points(16 * 3 + 8);
    for (int n = 0; n < 4; ++n) {
        std::int64_t base = 16 * n;
        std::int64_t bound = (n % 2 == 1) ? 8 : 9;
        for (int m = -8; m <= 8; ++m) {
            std::int64_t other = base + m;
            if (other < 0) continue;
            std::int64_t sq = sq_dist(pts[static_cast<std::size_t>(std::min(base, other))],
                                      pts[static_cast<std::size_t>(std::max(base, other))]);
            res.table.push_back({n, m, sq});
            if (sq > bound) res.bounds_ok = false;
            if (sq == bound) res.bound_equalities.push_back({n, m, sq});
            if (sq == 9 && m % 2 == 0) res.nine_only_at_odd_m = false;
        }
    }
    // 4(1-alpha) = (sqrt9 + sqrt8/4) (1 + 1/16 + 1/16^2 + ...)
    double series = 0.0, term = 1.0;
    for (int i = 0; i < depth_terms; ++i) { series += term; term /= 16.0; }
    double sqrt2 = std::sqrt(2.0);
    res.alpha = 1.0 - (3.0 + sqrt2 / 2.0) * series / 4.0;
    res.alpha_closed_form = (3.0 - 2.0 * sqrt2) / 15.0;
    return res;
}

LemmaTwoResult lemma_two(std::int64_t A, std::int64_t scan_max, int threads) {
    if (A < 1 || scan_max < A) throw std::invalid_argument("lemma_two: need 1 <= A <= scan_max");
    if (scan_max > kQuadraticScanLimit)
        throw std::invalid_argument("lemma_two: scan_max too large for the all-pairs scan");
    auto pts = prefix_points(scan_max);

    auto work = [&](std::int64_t lo, std::int64_t hi) {
        MinAccum acc;
        for (std::int64_t n = lo; n < hi; ++n)
            for (std::int64_t m = 0; m + A <= n; ++m)
                acc.offer(sq_dist(pts[static_cast<std::size_t>(m)],
                                  pts[static_cast<std::size_t>(n)]),
                          m, n, pts);
        return acc;
    };
    MinAccum acc =
        detail::parallel_ranges<MinAccum>(A, scan_max + 1, threads, work, MinAccum::merge);

    LemmaTwoResult res;
    res.A = A;
    res.scan_max = scan_max;
    res.min_sq_dist = acc.best;
    res.pass = acc.best >= 4;
    res.witnesses = std::move(acc.ties);
    sort_pairs(res.witnesses);
    return res;
}

HoelderConstants hoelder_constants() {
    HoelderConstants c;
    c.alpha = lemma_one().alpha;
    c.A = 16;
    c.a_lower = 2.0 * c.alpha / std::sqrt(2.0 * (static_cast<double>(c.A) + 1.0));
    c.b_upper = kHoelderUpper;
    c.b_upper_sq = kHoelderUpperSq;
    return c;
}

ConjectureReport conjecture_scan(std::int64_t n_max, int threads) {
    RatioBounds rb = ratio_bounds(n_max, threads);
    ConjectureReport rep;
    rep.n_max = n_max;
    rep.min_sq_ratio = rb.min_sq_ratio;
    rep.max_sq_ratio = rb.max_sq_ratio;
    rep.argmins = std::move(rb.argmins);
    rep.argmaxes = std::move(rb.argmaxes);
    rep.one_fifth_beaten = rep.min_sq_ratio < Ratio64(1, 5);
    rep.beats_25_17_from_above = rep.max_sq_ratio > Ratio64(25, 17);
    return rep;
}

bool ratio_within_hoelder_bound(std::int64_t sq_dist_val, std::int64_t gap) {
    // sq_dist/gap <= 12 + 8 sqrt2  <=>  sq_dist - 12 gap <= 8 sqrt2 gap
    std::int64_t lhs = sq_dist_val - 12 * gap;
    if (lhs <= 0) return true;
    return static_cast<__int128>(lhs) * lhs <= static_cast<__int128>(128) * gap * gap;
}

bool check_shift_invariance(std::int64_t n_hi, std::int64_t j_hi) {
    auto pts = prefix_points(n_hi + 64 * j_hi);
    for (std::int64_t m = 0; m < n_hi; ++m)
        for (std::int64_t n = m + 1; n <= n_hi; ++n) {
            std::int64_t ref = sq_dist(pts[static_cast<std::size_t>(m)],
                                       pts[static_cast<std::size_t>(n)]);
            for (std::int64_t j = 1; j <= j_hi; ++j)
                if (sq_dist(pts[static_cast<std::size_t>(m + 64 * j)],
                            pts[static_cast<std::size_t>(n + 64 * j)]) != ref)
                    return false;
        }
    return true;
}

bool check_translation_law(std::int64_t j_hi) {
    auto pts = prefix_points(16 + 16 * j_hi);
    for (std::int64_t m = 0; m < 16; ++m)
        for (std::int64_t n = m + 1; n < 16; ++n)
            for (std::int64_t j = 0; j <= j_hi; ++j) {
                std::int64_t j0 = j % 4;
                int aj = sign_at(j);
                Vec4i lhs = pts[static_cast<std::size_t>(n + 16 * j)] -
                            pts[static_cast<std::size_t>(m + 16 * j)];
                Vec4i rhs = (pts[static_cast<std::size_t>(n + 16 * j0)] -
                             pts[static_cast<std::size_t>(m + 16 * j0)]) *
                            static_cast<std::int64_t>(aj);
                if (lhs != rhs) return false;
            }
    return true;
}

std::pair<std::int64_t, std::int64_t> canonical_shift_class(std::int64_t m, std::int64_t n) {
    std::int64_t j = m / 64;
    return {m - 64 * j, n - 64 * j};
}

}  // namespace qh
