#pragma once

#include <cstdint>

#include <Eigen/Dense>

#include "qh/types.hpp"

namespace qh {

/// Walsh matrix of order 2^order_exponent: the n-th tensor power of
/// (1 1 / 1 -1), built by block doubling.  Throws std::length_error when the
/// order would exceed max_order.
Eigen::MatrixXi walsh(int order_exponent, int max_order = 4096);

/// The two structural matrices: M is the order-4 Walsh matrix and satisfies
/// M^2 = 4I; T satisfies T^2 = M (so T^4 = 4I and T^T T = 2I).
const Mat4i& matrix_M();
const Mat4i& matrix_T();

/// Exact matrix-vector product over dyadic coordinates.
Vec4dy apply(const Mat4i& m, const Vec4dy& v);

/// Exact inverse of T: T^{-1} = T^T / 2 (equivalently T^3 / 4).
Vec4dy apply_T_inverse(const Vec4dy& v);

/// Integer eigenvectors of M: M p = 2p for p in {p0, p1} and M q = -2q for
/// q in {q0, q1}; pairwise orthogonal with squared norms (4, 2, 4, 2).
/// The orthonormal frames v0..v3 (diagonalising M) and w0..w3
/// (diagonalising T) carry sqrt(2) factors and are kept exact as
/// RootTwo coordinates.  Frozen choice: w2 = v2 and w3 = v3, the pair in
/// span{v2, v3} for which T acts exactly as
/// T w0 = sqrt2 w0, T w1 = -sqrt2 w1, T w2 = sqrt2 w3, T w3 = -sqrt2 w2.
struct EigenFrame {
    static const Vec4i& p0();
    static const Vec4i& p1();
    static const Vec4i& q0();
    static const Vec4i& q1();
    static const Vec4r2& v(int i);  // v0..v3, orthonormal
    static const Vec4r2& w(int i);  // w0..w3, orthonormal
};

/// Orthogonal projection onto the plane P = span{p0, p1} (eigenvalue +2).
Vec4d project_plane_P(const Vec4d& v);

/// Reflection through P; equals (M/2) v for every v, because M/2 fixes P
/// pointwise and negates the complementary plane Q.
Vec4d reflect_through_P(const Vec4d& v);

}  // namespace qh
