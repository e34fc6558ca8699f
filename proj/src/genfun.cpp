#include "qh/genfun.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qh {

PolyQuad initial_quad() {
    PolyQuad q;
    q.p = q.q = q.r = q.t = IntPoly({1});
    q.level = 0;
    return q;
}

PolyQuad step(const PolyQuad& quad) {
    const std::vector<std::int64_t>* in[4] = {&quad.p.coeffs(), &quad.q.coeffs(),
                                              &quad.r.coeffs(), &quad.t.coeffs()};
    std::size_t block = std::size_t(1) << (2 * quad.level);  // 4^level
    for (const auto* poly : in)
        if (poly->size() != block)
            throw std::invalid_argument("step: quad is not a full level quadruple");

    PolyQuad out;
    out.level = quad.level + 1;
    IntPoly* dst[4] = {&out.p, &out.q, &out.r, &out.t};
    for (int row = 0; row < 4; ++row) {
        std::vector<std::int64_t> c;
        c.reserve(4 * block);
        for (int s = 0; s < 4; ++s) {
            int w = kWalsh4[static_cast<std::size_t>(row)][static_cast<std::size_t>(s)];
            for (std::int64_t v : *in[s]) c.push_back(w * v);
        }
        *dst[row] = IntPoly(std::move(c));
    }
    return out;
}

PolyQuad level_quad(int level) {
    if (level < 0 || level > 10) throw std::invalid_argument("level_quad: level out of range");
    PolyQuad q = initial_quad();
    for (int i = 0; i < level; ++i) q = step(q);
    return q;
}

double norm_identity_max_error(int level, int samples) {
    if (samples < 1) throw std::invalid_argument("norm_identity: samples must be >= 1");
    PolyQuad quad = level_quad(level);
    double target = std::pow(4.0, level + 1);
    double worst = 0.0;
    for (int k = 0; k < samples; ++k) {
        double theta = 2.0 * std::numbers::pi * k / samples;
        std::complex<double> z(std::cos(theta), std::sin(theta));
        double total = std::norm(quad.p.eval(z)) + std::norm(quad.q.eval(z)) +
                       std::norm(quad.r.eval(z)) + std::norm(quad.t.eval(z));
        worst = std::max(worst, std::abs(total - target));
    }
    return worst;
}

std::vector<sign_t> column_series(int c, std::int64_t length) {
    if (c < 0 || c > 3) throw std::invalid_argument("column_series: column must be 0..3");
    if (length < 1) throw std::invalid_argument("column_series: length must be >= 1");
    std::vector<sign_t> a = prefix(4 * length);
    std::vector<sign_t> out(static_cast<std::size_t>(length));
    for (std::int64_t m = 0; m < length; ++m)
        out[static_cast<std::size_t>(m)] = a[static_cast<std::size_t>(4 * m + c)];
    return out;
}

FunctionalEquationReport functional_equation_check(std::int64_t length) {
    if (length < 1) throw std::invalid_argument("functional_equation_check: length must be >= 1");
    FunctionalEquationReport rep;
    rep.length = length;
    std::vector<sign_t> a = prefix(4 * length + 4);
    for (std::int64_t i = 0; i < length; ++i) {
        for (int c = 0; c < 4; ++c) {
            int expect = kWalsh4[static_cast<std::size_t>(c)][static_cast<std::size_t>(i & 3)] *
                         a[static_cast<std::size_t>(i)];
            if (a[static_cast<std::size_t>(4 * i + c)] != expect) {
                rep.ok = false;
                rep.first_mismatch_index = i;
                rep.component = c;
                return rep;
            }
        }
    }
    return rep;
}

}  // namespace qh
