#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>

#include "qh/genfun.hpp"

using namespace qh;

namespace {

std::vector<std::int64_t> signs_to_i64(const std::vector<sign_t>& v) {
    return {v.begin(), v.end()};
}

}  // namespace

TEST_CASE("level-1 quadruple") {
    PolyQuad q1 = step(initial_quad());
    CHECK(q1.p == IntPoly({1, 1, 1, 1}));
    CHECK(q1.q == IntPoly({1, -1, 1, -1}));
    CHECK(q1.r == IntPoly({1, 1, -1, -1}));
    CHECK(q1.t == IntPoly({1, -1, -1, 1}));
    CHECK_THROWS_AS(step(PolyQuad{IntPoly({1, 1}), IntPoly({1}), IntPoly({1}), IntPoly({1}), 0}),
                    std::invalid_argument);
}

TEST_CASE("P_n carries the sequence prefix") {
    for (int level = 0; level <= 6; ++level) {
        PolyQuad q = level_quad(level);
        std::int64_t len = std::int64_t(1) << (2 * level);
        CHECK(static_cast<std::int64_t>(q.p.size()) == len);
        CHECK(q.p.coeffs() == signs_to_i64(prefix(len)));
        // all four level polynomials hold exactly 4^n coefficients, each +-1
        for (const IntPoly* poly : {&q.p, &q.q, &q.r, &q.t}) {
            CHECK(static_cast<std::int64_t>(poly->size()) == len);
            for (std::int64_t c : poly->coeffs()) CHECK(std::abs(c) == 1);
        }
    }
}

TEST_CASE("successive P agree on the shared prefix (formal limit)") {
    PolyQuad prev = level_quad(3);
    PolyQuad next = step(prev);
    for (std::size_t i = 0; i < prev.p.size(); ++i) CHECK(next.p[i] == prev.p[i]);
}

TEST_CASE("norm identity at distinguished points") {
    PolyQuad q1 = level_quad(1);
    auto at = [&](std::complex<double> z) {
        return std::norm(q1.p.eval(z)) + std::norm(q1.q.eval(z)) + std::norm(q1.r.eval(z)) +
               std::norm(q1.t.eval(z));
    };
    CHECK(at({1.0, 0.0}) == doctest::Approx(16.0).epsilon(1e-14));
    // z = i: |P|^2 = 0, |Q|^2 = 0, |R|^2 = 8, |T|^2 = 8
    std::complex<double> i(0.0, 1.0);
    CHECK(std::norm(q1.p.eval(i)) == doctest::Approx(0.0));
    CHECK(std::norm(q1.r.eval(i)) == doctest::Approx(8.0).epsilon(1e-14));
    CHECK(at(i) == doctest::Approx(16.0).epsilon(1e-14));
}

TEST_CASE("norm identity on sampled unit circle") {
    CHECK(norm_identity_max_error(1, 64) / 16.0 <= 1e-9);
    CHECK(norm_identity_max_error(2, 64) / 64.0 <= 1e-9);
    CHECK(norm_identity_max_error(3, 64) / 256.0 <= 1e-9);
    CHECK(norm_identity_max_error(4, 64) / 1024.0 <= 1e-9);
    CHECK(norm_identity_max_error(6, 64) / 16384.0 <= 1e-6);
}

TEST_CASE("column series") {
    auto f0 = column_series(0, 256);
    CHECK(f0 == prefix(256));  // f_0 = f
    auto f1 = column_series(1, 4);
    CHECK(f1 == std::vector<sign_t>{1, -1, 1, -1});  // a_1, a_5, a_9, a_13
    auto f3 = column_series(3, 1);
    CHECK(f3 == std::vector<sign_t>{1});  // a_3
    // column reading equals the letter-replacement reading: coefficient m of
    // f_c is a_m times the Walsh row value at (m mod 4, c)
    auto p = prefix(64);
    for (int c = 0; c < 4; ++c) {
        auto fc = column_series(c, 64);
        for (std::int64_t m = 0; m < 64; ++m)
            CHECK(fc[static_cast<std::size_t>(m)] ==
                  p[static_cast<std::size_t>(m)] *
                      kWalsh4[static_cast<std::size_t>(m % 4)][static_cast<std::size_t>(c)]);
    }
}

TEST_CASE("functional equation") {
    auto rep = functional_equation_check(256);
    CHECK(rep.ok);
    CHECK(functional_equation_check(1).ok);
    CHECK(functional_equation_check(1024).ok);
    // component 0 restates the four-way decomposition of f
    auto p = prefix(1024);
    auto f0 = column_series(0, 64);
    auto f1 = column_series(1, 64);
    auto f2 = column_series(2, 64);
    auto f3 = column_series(3, 64);
    for (std::int64_t m = 0; m < 64; ++m) {
        CHECK(p[static_cast<std::size_t>(4 * m + 0)] == f0[static_cast<std::size_t>(m)]);
        CHECK(p[static_cast<std::size_t>(4 * m + 1)] == f1[static_cast<std::size_t>(m)]);
        CHECK(p[static_cast<std::size_t>(4 * m + 2)] == f2[static_cast<std::size_t>(m)]);
        CHECK(p[static_cast<std::size_t>(4 * m + 3)] == f3[static_cast<std::size_t>(m)]);
    }
}

TEST_CASE("int poly basics") {
    IntPoly z({0, 0, 0});
    CHECK(z.is_zero());
    CHECK(z.degree() == -1);
    IntPoly p({1, 0, 2, 0});
    CHECK(p.degree() == 2);
    CHECK(p[0] == 1);
    CHECK(p[1] == 0);
    CHECK(p[2] == 2);
    CHECK(p[99] == 0);
    CHECK(p.eval({2.0, 0.0}) == std::complex<double>(9.0, 0.0));
}
