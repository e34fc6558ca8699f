#include "qh/spherical.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qh/parallel.hpp"

namespace qh {

namespace {

Vec4d normalized(const Vec4d& v) {
    double n = v.norm();
    if (n == 0.0) throw std::domain_error("cannot normalize the zero vector");
    return v / n;
}

double angle_between(const Vec4d& a, const Vec4d& b) {
    double c = a.dot(b) / (a.norm() * b.norm());
    return std::acos(std::clamp(c, -1.0, 1.0));
}

/// S at the base-4 repunits r_1 = 1, r_{j+1} = 4 r_j + 1, exact.
std::vector<Vec4z> repunit_points(int count) {
    std::vector<Vec4z> pts;
    pts.reserve(static_cast<std::size_t>(count));
    Int r(1);
    for (int j = 1; j <= count; ++j) {
        pts.push_back(partial_sum(r));
        r = r * Int(4) + Int(1);
    }
    return pts;
}

}  // namespace

Vec4d sphere_point(const Dyadic& t) {
    if (t.signum() <= 0) throw std::invalid_argument("sphere_point: parameter must be > 0");
    return normalized(to_double(eval_dyadic(t)));
}

std::vector<std::pair<double, Vec4d>> closed_curve_samples(const Dyadic& anchor, int count) {
    if (anchor.signum() <= 0)
        throw std::invalid_argument("closed_curve_samples: anchor must be > 0");
    if (count < 1) throw std::invalid_argument("closed_curve_samples: count must be >= 1");
    std::vector<std::pair<double, Vec4d>> out;
    out.reserve(static_cast<std::size_t>(count));
    double a = anchor.to_double();
    for (int i = 0; i < count; ++i) {
        Dyadic t;
        if (i == 0) t = anchor;
        else if (i == count - 1) t = anchor * Dyadic(16);
        else t = Dyadic::from_double(a * std::pow(16.0, static_cast<double>(i) / (count - 1)));
        out.emplace_back(t.to_double(), sphere_point(t));
    }
    return out;
}

DoublePointResult double_point(int depth) {
    if (depth < 2) throw std::invalid_argument("double_point: depth must be >= 2");
    DoublePointResult res;
    res.depth = depth;
    // directions converge at rate 1/2 per digit, so limit diagnostics use a
    // deeper tail than the reported iterates
    int deep = std::max(depth, 48);
    auto pts = repunit_points(deep + 1);
    res.truncation_points.assign(pts.begin(), pts.begin() + depth + 1);
    const Vec4z& first = pts[static_cast<std::size_t>(depth - 1)];
    const Vec4z& second = pts[static_cast<std::size_t>(depth)];
    res.dir_first = normalized(to_double(first));
    res.dir_second = normalized(to_double(second));
    res.angle = angle_between(res.dir_first, res.dir_second);
    res.limit_reference = Vec4d(3, 1, 1, 1) / (2.0 * std::sqrt(3.0));
    Vec4d limit = normalized(to_double(pts.back()));
    Vec4d q0 = to_double(EigenFrame::q0()) / 2.0;             // unit
    Vec4d q1 = to_double(EigenFrame::q1()) / std::sqrt(2.0);  // unit
    res.q0_component = limit.dot(q0);
    res.q1_component = limit.dot(q1);
    return res;
}

ShiftedDoublePointResult double_point_shifted(int depth) {
    DoublePointResult base = double_point(depth);
    ShiftedDoublePointResult res;
    res.depth = depth;
    const Mat4d t = matrix_T().cast<double>();
    res.dir_first = normalized(t * base.dir_first);
    res.dir_second = normalized(t * base.dir_second);
    res.angle = angle_between(res.dir_first, res.dir_second);
    res.limit_reference = Vec4d(2, 1, 1, 0) / std::sqrt(6.0);
    // reflection across the w0 axis inside P swaps the two double points;
    // measured on the converged limit directions
    int deep = std::max(depth, 48);
    Vec4d limit_a = normalized(to_double(repunit_points(deep).back()));
    Vec4d limit_b = normalized(t * limit_a);
    Vec4d w0;
    for (int i = 0; i < 4; ++i) w0[i] = EigenFrame::w(0)[i].to_double();
    Vec4d reflected = 2.0 * limit_a.dot(w0) * w0 - limit_a;
    res.w0_symmetry_error = (reflected - limit_b).norm();
    return res;
}

Vec4d central_projection(const Dyadic& t) {
    if (t.signum() <= 0) throw std::invalid_argument("central_projection: parameter must be > 0");
    Vec4dy v = eval_dyadic(t);
    if (v[0].is_zero()) throw std::domain_error("central_projection: S_0(t) = 0");
    double x0 = v[0].to_double();
    return Vec4d(1.0, v[1].to_double() / x0, v[2].to_double() / x0, v[3].to_double() / x0);
}

std::vector<Vec4d> projective_sequence(const std::array<Vec4d, 4>& anchors, std::int64_t steps) {
    if (steps < 1) throw std::invalid_argument("projective_sequence: steps must be >= 1");
    std::vector<Vec4d> points;
    points.reserve(static_cast<std::size_t>(steps) + 1);
    points.push_back(anchors[0]);  // M_0 = A_0 (= a_0 A_0 / a_0)
    SignStream signs;
    std::int64_t denom = signs.next();  // a_0 + ... + a_n, n starting at 0
    for (std::int64_t n = 1; n <= steps; ++n) {
        std::int64_t prev = denom;
        int a_n = signs.next();
        denom += a_n;
        if (denom == 0)
            throw std::domain_error("projective_sequence: zero denominator at step " +
                                    std::to_string(n));
        Vec4d next = (static_cast<double>(prev) * points.back() +
                      static_cast<double>(a_n) * anchors[static_cast<std::size_t>(n & 3)]) /
                     static_cast<double>(denom);
        points.push_back(next);
    }
    return points;
}

std::vector<DirectionSample> direction_samples(std::int64_t n_max) {
    if (n_max < 1) throw std::invalid_argument("direction_samples: n_max must be >= 1");
    if (n_max > 2048)  // about 2M materialized samples
        throw std::invalid_argument("direction_samples: n_max too large for all-pairs sampling");
    std::vector<Vec4i> pts(static_cast<std::size_t>(n_max) + 1);
    SumStream stream;
    for (std::int64_t n = 0; n <= n_max; ++n) pts[static_cast<std::size_t>(n)] = stream.next();
    std::vector<DirectionSample> out;
    out.reserve(static_cast<std::size_t>(n_max) * (static_cast<std::size_t>(n_max) + 1) / 2);
    for (std::int64_t n = 1; n <= n_max; ++n)
        for (std::int64_t m = 0; m < n; ++m) {
            DirectionSample s;
            s.m = m;
            s.n = n;
            s.diff = pts[static_cast<std::size_t>(n)] - pts[static_cast<std::size_t>(m)];
            s.direction = normalized(to_double(s.diff));
            out.push_back(s);
        }
    return out;
}

namespace {

/// Cell of the 8-face gnomonic grid: face = signed argmax coordinate, the
/// other three coordinates divided by it land in [-1,1]^3 split into k^3.
std::int64_t cell_of(const Vec4d& dir, int k) {
    int axis = 0;
    double best = std::abs(dir[0]);
    for (int i = 1; i < 4; ++i)
        if (std::abs(dir[i]) > best) { best = std::abs(dir[i]); axis = i; }
    int face = 2 * axis + (dir[axis] < 0 ? 1 : 0);
    std::int64_t cell = face;
    for (int i = 0; i < 4; ++i) {
        if (i == axis) continue;
        double y = dir[i] / std::abs(dir[axis]);  // in [-1, 1]
        auto idx = static_cast<std::int64_t>((y + 1.0) / 2.0 * k);
        idx = std::clamp<std::int64_t>(idx, 0, k - 1);
        cell = cell * k + idx;
    }
    return cell;
}

Vec4d cell_center(std::int64_t cell, int k) {
    std::int64_t rest = cell;
    std::int64_t i2 = rest % k; rest /= k;
    std::int64_t i1 = rest % k; rest /= k;
    std::int64_t i0 = rest % k; rest /= k;
    int face = static_cast<int>(rest);
    int axis = face / 2;
    double sign = face % 2 ? -1.0 : 1.0;
    double ys[3] = {(2.0 * i0 + 1.0) / k - 1.0, (2.0 * i1 + 1.0) / k - 1.0,
                    (2.0 * i2 + 1.0) / k - 1.0};
    Vec4d v;
    int j = 0;
    for (int i = 0; i < 4; ++i) {
        if (i == axis) v[i] = sign;
        else v[i] = ys[j++];
    }
    return v / v.norm();
}

}  // namespace

CoverageReport direction_density(std::int64_t n_max, int grid_k, int threads) {
    if (grid_k < 1 || grid_k > 64) throw std::invalid_argument("direction_density: grid_k in 1..64");
    if (n_max < 1 || n_max > 8192)
        throw std::invalid_argument("direction_density: n_max must be in 1..8192");
    CoverageReport rep;
    rep.n_max = n_max;
    rep.grid_k = grid_k;
    rep.total_cells = 8 * static_cast<std::int64_t>(grid_k) * grid_k * grid_k;

    std::vector<Vec4i> pts(static_cast<std::size_t>(n_max) + 1);
    SumStream stream;
    for (std::int64_t n = 0; n <= n_max; ++n) pts[static_cast<std::size_t>(n)] = stream.next();

    using Bits = std::vector<char>;
    auto work = [&](std::int64_t lo, std::int64_t hi) {
        Bits bits(static_cast<std::size_t>(rep.total_cells), 0);
        for (std::int64_t n = lo; n < hi; ++n)
            for (std::int64_t m = 0; m < n; ++m) {
                Vec4i d = pts[static_cast<std::size_t>(n)] - pts[static_cast<std::size_t>(m)];
                bits[static_cast<std::size_t>(cell_of(normalized(to_double(d)), grid_k))] = 1;
            }
        return bits;
    };
    auto merge = [](Bits a, Bits b) {
        for (std::size_t i = 0; i < a.size(); ++i) a[i] |= b[i];
        return a;
    };
    Bits occupied = detail::parallel_ranges<Bits>(1, n_max + 1, threads, work, merge);

    rep.pair_count = n_max * (n_max + 1) / 2;
    std::vector<Vec4d> occupied_centers;
    for (std::int64_t c = 0; c < rep.total_cells; ++c)
        if (occupied[static_cast<std::size_t>(c)]) {
            ++rep.occupied_cells;
            occupied_centers.push_back(cell_center(c, grid_k));
        }
    rep.fraction = static_cast<double>(rep.occupied_cells) / static_cast<double>(rep.total_cells);

    double worst = 0.0;
    for (std::int64_t c = 0; c < rep.total_cells; ++c) {
        if (occupied[static_cast<std::size_t>(c)]) continue;
        Vec4d center = cell_center(c, grid_k);
        double nearest = 3.2;  // > pi
        for (const Vec4d& o : occupied_centers)
            nearest = std::min(nearest, angle_between(center, o));
        worst = std::max(worst, nearest);
    }
    rep.largest_empty_cap_radians = worst;
    return rep;
}

}  // namespace qh
