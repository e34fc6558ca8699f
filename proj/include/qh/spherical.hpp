#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "qh/curve.hpp"
#include "qh/types.hpp"

namespace qh {

/// Radial projection S(t)/||S(t)|| onto the unit sphere; t must be > 0
/// (the first coordinate of S is positive there, so S(t) != 0).
Vec4d sphere_point(const Dyadic& t);

/// `count` samples of the closed spherical curve over [anchor, 16 anchor],
/// geometrically spaced; the two endpoints project to the same unit vector.
std::vector<std::pair<double, Vec4d>> closed_curve_samples(const Dyadic& anchor, int count);

/// The double point at parameters 1/3 and 4/3: exact curve values at the
/// base-4 repunit truncations r_j = (4^j - 1)/3 (for 0.111...) and r_{j+1}
/// read at the same scale (for 1.111...), their limiting common direction
/// (3,1,1,1)/(2 sqrt3), and diagnostics of the convergence.
struct DoublePointResult {
    int depth = 0;
    std::vector<Vec4z> truncation_points;   // S(r_1) ... S(r_depth+1)
    Vec4d dir_first;                        // direction of S(r_depth)
    Vec4d dir_second;                       // direction of S(r_depth+1)
    double angle = 0.0;                     // between the two directions
    Vec4d limit_reference;                  // (3,1,1,1)/(2 sqrt3)
    double q0_component = 0.0;              // components of dir_first along the
    double q1_component = 0.0;              // plane-Q frame (vanish in P)
};

DoublePointResult double_point(int depth);

/// The shifted double point 2/3 vs 8/3 obtained by one application of T:
/// common direction (2,1,1,0)/sqrt6; also checks that the two double points
/// are swapped by the reflection across the w0 axis inside the plane P.
struct ShiftedDoublePointResult {
    int depth = 0;
    Vec4d dir_first;     // direction of T S(r_depth)
    Vec4d dir_second;    // direction of T S(r_depth+1)
    double angle = 0.0;
    Vec4d limit_reference;          // (2,1,1,0)/sqrt6
    double w0_symmetry_error = 0.0; // |reflect_w0(dir at 1/3) - dir at 2/3|
};

ShiftedDoublePointResult double_point_shifted(int depth);

/// Central projection S(t)/S_0(t) onto the hyperplane x0 = 1; first
/// coordinate is exactly 1.  Throws std::domain_error if S_0(t) = 0
/// (not expected for t > 0).
Vec4d central_projection(const Dyadic& t);

/// Projectively weighted point sequence M_0 = A_0,
/// M_{n+1} = ((a_0+...+a_{n-1}) M_n + a_n A_n) / (a_0+...+a_n),
/// with A_{j+4} = A_j.  Returns M_0 .. M_steps.  The running denominators
/// equal the first coordinate of S(4(n+1)) and stay positive; a zero
/// denominator (possible only in exotic anchor setups) raises
/// std::domain_error with the step index in the message.
std::vector<Vec4d> projective_sequence(const std::array<Vec4d, 4>& anchors, std::int64_t steps);

/// Direction samples (S(n)-S(m))/||.|| binned on an 8-face gnomonic
/// hypercube grid of k^3 cells per face; exploratory coverage evidence for
/// the density question, no ground-truth claim.
struct CoverageReport {
    std::int64_t n_max = 0;
    int grid_k = 0;
    std::int64_t total_cells = 0;
    std::int64_t occupied_cells = 0;
    double fraction = 0.0;
    double largest_empty_cap_radians = 0.0;
    std::int64_t pair_count = 0;
};

CoverageReport direction_density(std::int64_t n_max, int grid_k, int threads = 1);

/// One direction sample, exact integer difference plus unit direction.
struct DirectionSample {
    std::int64_t m = 0, n = 0;
    Vec4i diff = Vec4i::Zero();
    Vec4d direction = Vec4d::Zero();
};

std::vector<DirectionSample> direction_samples(std::int64_t n_max);

}  // namespace qh
