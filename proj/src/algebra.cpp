#include "qh/algebra.hpp"

#include <stdexcept>

namespace qh {

Eigen::MatrixXi walsh(int order_exponent, int max_order) {
    if (order_exponent < 1) throw std::invalid_argument("walsh: order exponent must be >= 1");
    if (order_exponent >= 31 || (1 << order_exponent) > max_order)
        throw std::length_error("walsh: order exceeds configured limit");
    int n = 1 << order_exponent;
    Eigen::MatrixXi m(n, n);
    m(0, 0) = 1;
    for (int half = 1; half < n; half *= 2) {
        m.block(0, half, half, half) = m.block(0, 0, half, half);
        m.block(half, 0, half, half) = m.block(0, 0, half, half);
        m.block(half, half, half, half) = -m.block(0, 0, half, half);
    }
    return m;
}

const Mat4i& matrix_M() {
    static const Mat4i m = (Mat4i() << 1, 1, 1, 1,
                                       1, -1, 1, -1,
                                       1, 1, -1, -1,
                                       1, -1, -1, 1).finished();
    return m;
}

const Mat4i& matrix_T() {
    static const Mat4i t = (Mat4i() << 1, 0, 1, 0,
                                       1, 0, -1, 0,
                                       0, 1, 0, 1,
                                       0, 1, 0, -1).finished();
    return t;
}

Vec4dy apply(const Mat4i& m, const Vec4dy& v) {
    Vec4dy out;
    for (int i = 0; i < 4; ++i) {
        Dyadic acc;
        for (int j = 0; j < 4; ++j) {
            if (m(i, j) == 0) continue;
            acc += v[j] * Dyadic(m(i, j));
        }
        out[i] = acc;
    }
    return out;
}

Vec4dy apply_T_inverse(const Vec4dy& v) {
    Vec4dy out = apply(matrix_T().transpose(), v);
    for (int i = 0; i < 4; ++i) out[i] = out[i] * Dyadic::half();
    return out;
}

const Vec4i& EigenFrame::p0() {
    static const Vec4i v = (Vec4i() << 1, 1, 1, -1).finished();
    return v;
}
const Vec4i& EigenFrame::p1() {
    static const Vec4i v = (Vec4i() << 1, 0, 0, 1).finished();
    return v;
}
const Vec4i& EigenFrame::q0() {
    static const Vec4i v = (Vec4i() << 1, -1, -1, -1).finished();
    return v;
}
const Vec4i& EigenFrame::q1() {
    static const Vec4i v = (Vec4i() << 0, 1, -1, 0).finished();
    return v;
}

namespace {

RootTwo rt(std::int64_t halves, std::int64_t sqrt2_quarters) {
    // value halves/2 + (sqrt2_quarters/4) sqrt2
    return RootTwo(Dyadic(Int(halves), 1), Dyadic(Int(sqrt2_quarters), 2));
}

Vec4r2 make_v(int i) {
    switch (i) {
        // v0 = (u0+u1+u2-u3)/2,           v1 = (sqrt2/2)(u0+u3)
        // v2 = (u0-u1-u2-u3)/2,           v3 = (sqrt2/2)(u1-u2)
        case 0: return (Vec4r2() << rt(1, 0), rt(1, 0), rt(1, 0), rt(-1, 0)).finished();
        case 1: return (Vec4r2() << rt(0, 2), rt(0, 0), rt(0, 0), rt(0, 2)).finished();
        case 2: return (Vec4r2() << rt(1, 0), rt(-1, 0), rt(-1, 0), rt(-1, 0)).finished();
        case 3: return (Vec4r2() << rt(0, 0), rt(0, 2), rt(0, -2), rt(0, 0)).finished();
        default: throw std::out_of_range("EigenFrame::v");
    }
}

Vec4r2 make_w(int i) {
    // w0 = (sqrt2/2)(v0+v1), w1 = (sqrt2/2)(v0-v1), w2 = v2, w3 = v3
    switch (i) {
        case 0: return (Vec4r2() << rt(1, 1), rt(0, 1), rt(0, 1), rt(1, -1)).finished();
        case 1: return (Vec4r2() << rt(-1, 1), rt(0, 1), rt(0, 1), rt(-1, -1)).finished();
        case 2: return make_v(2);
        case 3: return make_v(3);
        default: throw std::out_of_range("EigenFrame::w");
    }
}

}  // namespace

const Vec4r2& EigenFrame::v(int i) {
    static const Vec4r2 vs[4] = {make_v(0), make_v(1), make_v(2), make_v(3)};
    return vs[i];
}

const Vec4r2& EigenFrame::w(int i) {
    static const Vec4r2 ws[4] = {make_w(0), make_w(1), make_w(2), make_w(3)};
    return ws[i];
}

Vec4d reflect_through_P(const Vec4d& v) {
    return 0.5 * (matrix_M().cast<double>() * v);
}

Vec4d project_plane_P(const Vec4d& v) {
    return 0.5 * (v + reflect_through_P(v));
}

}  // namespace qh
