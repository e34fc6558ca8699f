#include "qh/curve.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace qh {

namespace {

constexpr std::int64_t kFastPathLimit = std::int64_t(1) << 30;  // 4^15

// tail(r, c) = sum_{col < c} kWalsh4[r][col] u_col
Vec4i walsh_row_prefix(int r, int c) {
    Vec4i t = Vec4i::Zero();
    for (int col = 0; col < c; ++col) t[col] = kWalsh4[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
    return t;
}

template <class Scalar>
Vec4<Scalar> partial_sum_digits(const std::vector<std::uint8_t>& digits) {
    const Mat4<Scalar> m = matrix_M().cast<Scalar>();
    Vec4<Scalar> s = Vec4<Scalar>::Zero();
    int sign = 1;     // a_m for the index m read so far
    int m_mod4 = 0;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
        int d = *it;
        Vec4<Scalar> tail = walsh_row_prefix(m_mod4, d).cast<Scalar>();
        s = (m * s + Scalar(sign) * tail).eval();
        sign *= kWalsh4[static_cast<std::size_t>(m_mod4)][static_cast<std::size_t>(d)];
        m_mod4 = d;
    }
    return s;
}

}  // namespace

Vec4z partial_sum(const Int& n) {
    if (n.is_negative()) throw std::invalid_argument("partial_sum: negative index");
    return partial_sum_digits<Int>(digits4(n));
}

Vec4i partial_sum64(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("partial_sum64: negative index");
    if (n > kFastPathLimit) throw std::invalid_argument("partial_sum64: beyond 4^15 fast path");
    return partial_sum_digits<std::int64_t>(digits4(n));
}

Vec4dy eval_dyadic(const Dyadic& t) {
    if (t.is_negative()) throw std::invalid_argument("eval_dyadic: parameter must be >= 0");
    Vec4z s = partial_sum(t.numerator());
    // T^{-k} = (T^T)^k / 2^k ; keep the integer part and attach the exponent
    std::uint32_t k = t.exponent();
    const Mat4z tt = matrix_T().transpose().cast<Int>();
    for (std::uint32_t i = 0; i < k; ++i) s = (tt * s).eval();
    Vec4dy out;
    for (int i = 0; i < 4; ++i) out[i] = Dyadic(s[i], k);
    return out;
}

Vec4d eval_real(double t, double tol) {
    if (!(t >= 0)) throw std::invalid_argument("eval_real: parameter must be >= 0");
    if (!(tol > 0)) throw std::invalid_argument("eval_real: tolerance must be > 0");
    double k_real = std::ceil(2.0 * std::log2(kHoelderUpper / tol));
    auto k = static_cast<std::int64_t>(std::max(0.0, k_real));
    if (k > 1000) throw std::invalid_argument("eval_real: tolerance too small");
    // p = round(t 2^k) must be exactly representable to keep |t - p/2^k|
    // under 2^{-k-1}
    double scaled = std::ldexp(t, static_cast<int>(k));
    if (scaled >= 9.0e15) throw std::invalid_argument("eval_real: tolerance too small for this parameter");
    auto p = static_cast<std::int64_t>(std::llround(scaled));
    return to_double(eval_dyadic(Dyadic(Int(p), static_cast<std::uint32_t>(k))));
}

ArcIsometryReport check_arc_isometry(std::int64_t j, int samples) {
    if (j < 0) throw std::invalid_argument("check_arc_isometry: j must be >= 0");
    if (samples < 1) throw std::invalid_argument("check_arc_isometry: samples must be >= 1");
    ArcIsometryReport rep;
    rep.j = j;
    rep.j0 = static_cast<int>(j % 4);
    rep.sign = sign_at(Int(j));
    rep.samples = samples;

    std::mt19937_64 rng(0x9e3779b97f4a7c15ull ^ static_cast<std::uint64_t>(j));
    Dyadic dj(Int(j), 0), dj0(rep.j0);
    for (int i = 0; i < samples; ++i) {
        std::uint32_t k = 1 + static_cast<std::uint32_t>(rng() % 12);
        std::int64_t den = std::int64_t(1) << k;
        std::int64_t ps = 1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(den - 1));
        std::int64_t pt = 1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(den - 1));
        Dyadic s(Int(ps), k), t(Int(pt), k);
        Vec4dy lhs = eval_dyadic(t + dj);
        Vec4dy lhs2 = eval_dyadic(s + dj);
        Vec4dy rhs = eval_dyadic(t + dj0);
        Vec4dy rhs2 = eval_dyadic(s + dj0);
        bool ok = true;
        for (int c = 0; c < 4 && ok; ++c)
            ok = (lhs[c] - lhs2[c]) == (rhs[c] - rhs2[c]) * Dyadic(rep.sign);
        if (!ok) {
            rep.ok = false;
            rep.witness_s = s;
            rep.witness_t = t;
            return rep;
        }
    }
    return rep;
}

FirstCoordinateScan first_coordinate_min(std::int64_t limit) {
    if (limit < 1) throw std::invalid_argument("first_coordinate_min: limit must be >= 1");
    if (limit > kFastPathLimit)
        throw std::invalid_argument("first_coordinate_min: beyond 4^15 fast path");
    FirstCoordinateScan scan;
    scan.limit = limit;
    scan.min_value = 0;
    SumStream stream;
    for (std::int64_t n = 0; n <= limit; ++n) {
        std::int64_t s0 = stream.next()[0];
        if (s0 < scan.min_value) {
            scan.min_value = s0;
            scan.argmin.clear();
        }
        if (s0 == scan.min_value) scan.argmin.push_back(n);
    }
    return scan;
}

}  // namespace qh
