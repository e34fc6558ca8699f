#pragma once

#include <cstdint>

#include <Eigen/Core>

#include "qh/bigint.hpp"
#include "qh/dyadic.hpp"
#include "qh/root_two.hpp"

namespace Eigen {

template <>
struct NumTraits<qh::Int> : GenericNumTraits<qh::Int> {
    typedef qh::Int Real;
    typedef qh::Int NonInteger;
    typedef qh::Int Nested;
    typedef qh::Int Literal;
    enum {
        IsComplex = 0,
        IsInteger = 1,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 30,
        MulCost = 60
    };
    static inline Real epsilon() { return qh::Int(0); }
    static inline Real dummy_precision() { return qh::Int(0); }
    static inline int digits10() { return 0; }
};

template <>
struct NumTraits<qh::Dyadic> : GenericNumTraits<qh::Dyadic> {
    typedef qh::Dyadic Real;
    typedef qh::Dyadic NonInteger;
    typedef qh::Dyadic Nested;
    typedef qh::Dyadic Literal;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 40,
        MulCost = 80
    };
    static inline Real epsilon() { return qh::Dyadic(0); }
    static inline Real dummy_precision() { return qh::Dyadic(0); }
    static inline int digits10() { return 0; }
};

template <>
struct NumTraits<qh::RootTwo> : GenericNumTraits<qh::RootTwo> {
    typedef qh::RootTwo Real;
    typedef qh::RootTwo NonInteger;
    typedef qh::RootTwo Nested;
    typedef qh::RootTwo Literal;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 80,
        MulCost = 160
    };
    static inline Real epsilon() { return qh::RootTwo(0); }
    static inline Real dummy_precision() { return qh::RootTwo(0); }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace qh {

template <class Scalar>
using Vec4 = Eigen::Matrix<Scalar, 4, 1>;
template <class Scalar>
using Mat4 = Eigen::Matrix<Scalar, 4, 4>;

using Vec4i = Vec4<std::int64_t>;   // fixed-width fast path
using Vec4z = Vec4<Int>;            // exact, unbounded
using Vec4dy = Vec4<Dyadic>;
using Vec4r2 = Vec4<RootTwo>;
using Vec4d = Eigen::Vector4d;

using Mat4i = Mat4<std::int64_t>;
using Mat4z = Mat4<Int>;
using Mat4dy = Mat4<Dyadic>;
using Mat4r2 = Mat4<RootTwo>;
using Mat4d = Eigen::Matrix4d;

template <class To, class From>
Vec4<To> cast_vec4(const Vec4<From>& v) {
    return Vec4<To>(To(v[0]), To(v[1]), To(v[2]), To(v[3]));
}

inline Vec4d to_double(const Vec4i& v) {
    return Vec4d(static_cast<double>(v[0]), static_cast<double>(v[1]),
                 static_cast<double>(v[2]), static_cast<double>(v[3]));
}
inline Vec4d to_double(const Vec4z& v) {
    return Vec4d(v[0].to_double(), v[1].to_double(), v[2].to_double(), v[3].to_double());
}
inline Vec4d to_double(const Vec4dy& v) {
    return Vec4d(v[0].to_double(), v[1].to_double(), v[2].to_double(), v[3].to_double());
}

}  // namespace qh
