#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qh/spherical.hpp"

using namespace qh;

namespace {

Dyadic dy(std::int64_t num, std::uint32_t k = 0) { return Dyadic(Int(num), k); }

Vec4z zvec(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    return (Vec4z() << Int(a), Int(b), Int(c), Int(d)).finished();
}

}  // namespace

TEST_CASE("sphere point") {
    Vec4d u0 = sphere_point(dy(1));
    CHECK((u0 - Vec4d(1, 0, 0, 0)).norm() < 1e-15);
    Vec4d s16 = sphere_point(dy(16));
    CHECK((s16 - Vec4d(1, 0, 0, 0)).norm() < 1e-15);  // closure under t -> 16t
    Vec4d s5 = sphere_point(dy(5));
    CHECK((s5 - Vec4d(2, 1, 1, 1) / std::sqrt(7.0)).norm() < 1e-15);
    CHECK_THROWS_AS(sphere_point(dy(0)), std::invalid_argument);
    CHECK_THROWS_AS(sphere_point(dy(-3)), std::invalid_argument);
}

TEST_CASE("closed curve samples") {
    auto loop = closed_curve_samples(dy(1), 33);
    REQUIRE(loop.size() == 33);
    CHECK((loop.front().second - loop.back().second).norm() < 1e-12);
    CHECK(loop.front().first == 1.0);
    CHECK(loop.back().first == 16.0);
    // the reflection through P carries the t sample to the 4t sample
    Mat4d half_m = 0.5 * matrix_M().cast<double>();
    for (double t : {1.0, 1.5, 2.25, 3.0}) {
        Vec4d a = sphere_point(Dyadic::from_double(t));
        Vec4d b = sphere_point(Dyadic::from_double(4.0 * t));
        CHECK((b - half_m * a).norm() < 1e-12);
    }
    auto single = closed_curve_samples(dy(2), 1);
    REQUIRE(single.size() == 1);
    CHECK(single[0].first == 2.0);
}

TEST_CASE("double point: displayed truncation values") {
    auto res = double_point(6);
    REQUIRE(res.truncation_points.size() == 7);
    CHECK(res.truncation_points[0] == zvec(1, 0, 0, 0));
    CHECK(res.truncation_points[1] == zvec(2, 1, 1, 1));
    CHECK(res.truncation_points[2] == zvec(4, 1, 1, 1));
    CHECK(res.truncation_points[3] == zvec(8, 3, 3, 3));
    CHECK(res.truncation_points[4] == zvec(16, 5, 5, 5));
    CHECK(res.truncation_points[5] == zvec(32, 11, 11, 11));
}

TEST_CASE("double point: convergence to the common direction") {
    auto res = double_point(20);
    CHECK(res.angle < 1e-5);
    CHECK((res.dir_first - res.limit_reference).norm() < 1e-5);
    CHECK((res.dir_second - res.limit_reference).norm() < 1e-5);
    // the limit lies in the plane P
    CHECK(std::abs(res.q0_component) < 1e-9);
    CHECK(std::abs(res.q1_component) < 1e-9);
    // Cauchy with ratio <= 0.51 beyond depth 6
    Vec4d prev_dir, cur_dir;
    double prev_step = -1;
    for (int depth = 6; depth <= 20; ++depth) {
        auto r = double_point(depth);
        if (depth > 6) {
            double step = (r.dir_first - prev_dir).norm();
            if (prev_step >= 0) CHECK(step <= 0.51 * prev_step + 1e-15);
            prev_step = step;
        }
        prev_dir = r.dir_first;
    }
    CHECK_THROWS_AS(double_point(1), std::invalid_argument);
}

TEST_CASE("shifted double point") {
    auto res = double_point_shifted(20);
    CHECK((res.limit_reference - Vec4d(2, 1, 1, 0) / std::sqrt(6.0)).norm() < 1e-15);
    CHECK(res.angle < 1e-5);
    CHECK((res.dir_first - res.limit_reference).norm() < 1e-5);
    // T(3,1,1,1) = (4,2,2,0)
    Vec4d t3111 = matrix_T().cast<double>() * Vec4d(3, 1, 1, 1);
    CHECK((t3111 - Vec4d(4, 2, 2, 0)).norm() == 0.0);
    // the two double points are mirror images across the w0 axis inside P
    CHECK(res.w0_symmetry_error < 1e-9);
}

TEST_CASE("central projection") {
    CHECK((central_projection(dy(1)) - Vec4d(1, 0, 0, 0)).norm() == 0.0);
    CHECK((central_projection(dy(5)) - Vec4d(1, 0.5, 0.5, 0.5)).norm() == 0.0);
    CHECK((central_projection(dy(85)) - Vec4d(1, 0.375, 0.375, 0.375)).norm() == 0.0);
    CHECK(central_projection(dy(7, 1))[0] == 1.0);  // t = 7/2
    CHECK_THROWS_AS(central_projection(dy(0)), std::invalid_argument);
}

TEST_CASE("projective sequence") {
    std::array<Vec4d, 4> anchors = {Vec4d(1, 0, 0, 0), Vec4d(0, 1, 0, 0), Vec4d(0, 0, 1, 0),
                                    Vec4d(0, 0, 0, 1)};
    auto pts = projective_sequence(anchors, 64);
    REQUIRE(pts.size() == 65);
    CHECK((pts[0] - Vec4d(1, 0, 0, 0)).norm() == 0.0);
    CHECK((pts[1] - Vec4d(0.5, 0.5, 0, 0)).norm() == 0.0);  // (a0 M0 + a1 A1)/(a0+a1)
    // point k is the signed centroid of the first k+1 anchors, and the
    // running denominator equals the first coordinate of S(4(k+1))
    SignStream signs;
    Vec4d acc = Vec4d::Zero();
    std::int64_t denom = 0;
    for (std::int64_t k = 0; k <= 64; ++k) {
        int a = signs.next();
        denom += a;
        acc += static_cast<double>(a) * anchors[static_cast<std::size_t>(k & 3)];
        Vec4d expected = acc / static_cast<double>(denom);
        CHECK((pts[static_cast<std::size_t>(k)] - expected).norm() < 1e-12);
        CHECK(denom == partial_sum64(4 * (k + 1))[0]);
    }
    CHECK_THROWS_AS(projective_sequence(anchors, 0), std::invalid_argument);
}

TEST_CASE("projective sequence matches the central projection projectively") {
    // with anchors u0..u3 the point at index 4^k - 1 is S(4^k) divided by the
    // coordinate sum, i.e. the same projective point as S(4^k)/S_0(4^k)
    std::array<Vec4d, 4> anchors = {Vec4d(1, 0, 0, 0), Vec4d(0, 1, 0, 0), Vec4d(0, 0, 1, 0),
                                    Vec4d(0, 0, 0, 1)};
    auto pts = projective_sequence(anchors, 1024);
    for (int k = 1; k <= 5; ++k) {
        std::int64_t n = (std::int64_t(1) << (2 * k)) - 1;
        Vec4d a = pts[static_cast<std::size_t>(n)].normalized();
        Vec4d b = central_projection(dy(n + 1)).normalized();
        CHECK((a - b).norm() < 1e-12);
    }
}

TEST_CASE("direction samples include the minimal-pair directions") {
    auto samples = direction_samples(64);
    bool plus = false, minus = false, u0 = false;
    Vec4d target = Vec4d(1, 0, 0, -1) / std::sqrt(2.0);
    for (const auto& s : samples) {
        if ((s.direction - target).norm() < 1e-12) plus = true;
        if ((s.direction + target).norm() < 1e-12) minus = true;
        if ((s.direction - Vec4d(1, 0, 0, 0)).norm() < 1e-12) u0 = true;
    }
    CHECK(plus);
    CHECK(minus);
    CHECK(u0);
    auto tiny = direction_samples(2);
    CHECK(tiny.size() == 3);
}

TEST_CASE("direction density coverage report") {
    auto rep = direction_density(256, 6, 2);
    CHECK(rep.total_cells == 8 * 6 * 6 * 6);
    CHECK(rep.occupied_cells > 0);
    CHECK(rep.occupied_cells <= rep.total_cells);
    CHECK(rep.fraction == doctest::Approx(static_cast<double>(rep.occupied_cells) /
                                          static_cast<double>(rep.total_cells)));
    CHECK(rep.pair_count == 256 * 257 / 2);
    CHECK(rep.largest_empty_cap_radians >= 0.0);
    CHECK(rep.largest_empty_cap_radians <= 3.2);
    // deterministic across thread counts
    auto rep1 = direction_density(256, 6, 1);
    CHECK(rep1.occupied_cells == rep.occupied_cells);
    CHECK(rep1.largest_empty_cap_radians == rep.largest_empty_cap_radians);
}
