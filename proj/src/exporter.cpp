#include "qh/exporter.hpp"

#include <stdexcept>

#include <nlohmann/json.hpp>

#include "qh/curve.hpp"
#include "qh/io.hpp"
#include "qh/spherical.hpp"

namespace qh {

namespace {

using Row = std::vector<std::string>;

std::string render(const std::string& kind, json params, ExportFormat fmt,
                   const std::vector<std::string>& header, const std::vector<Row>& rows,
                   const json& json_rows) {
    if (fmt == ExportFormat::csv) return csv_table(header, rows);
    return render_report(make_meta("export --kind " + kind, std::move(params)), json_rows);
}

Row point_row(double t, const Vec4d& x) {
    return {format_double(t), format_double(x[0]), format_double(x[1]), format_double(x[2]),
            format_double(x[3])};
}

json point_json(double t, const Vec4d& x) {
    return json{{"t", t}, {"x", vec4d_json(x)}};
}

}  // namespace

std::string export_curve(double tmin, double tmax, int samples, ExportFormat fmt) {
    if (!(tmin >= 0) || !(tmax >= tmin)) throw std::invalid_argument("export_curve: bad range");
    if (samples < 1) throw std::invalid_argument("export_curve: samples must be >= 1");
    std::vector<Row> rows;
    json jrows = json::array();
    for (int i = 0; i < samples; ++i) {
        double t = samples == 1 ? tmin : tmin + (tmax - tmin) * i / (samples - 1);
        Vec4d x = to_double(eval_dyadic(Dyadic::from_double(t)));
        rows.push_back(point_row(t, x));
        jrows.push_back(point_json(t, x));
    }
    return render("curve", json{{"tmin", tmin}, {"tmax", tmax}, {"samples", samples}}, fmt,
                  {"t", "x0", "x1", "x2", "x3"}, rows, jrows);
}

std::string export_sphere(double anchor, int samples, ExportFormat fmt) {
    auto pts = closed_curve_samples(Dyadic::from_double(anchor), samples);
    std::vector<Row> rows;
    json jrows = json::array();
    for (const auto& [t, x] : pts) {
        rows.push_back(point_row(t, x));
        jrows.push_back(point_json(t, x));
    }
    return render("sphere", json{{"anchor", anchor}, {"samples", samples}}, fmt,
                  {"t", "x0", "x1", "x2", "x3"}, rows, jrows);
}

std::string export_central(double tmin, double tmax, int samples, ExportFormat fmt) {
    if (!(tmin > 0) || !(tmax >= tmin)) throw std::invalid_argument("export_central: bad range");
    if (samples < 1) throw std::invalid_argument("export_central: samples must be >= 1");
    std::vector<Row> rows;
    json jrows = json::array();
    for (int i = 0; i < samples; ++i) {
        double t = samples == 1 ? tmin : tmin + (tmax - tmin) * i / (samples - 1);
        Vec4d x = central_projection(Dyadic::from_double(t));
        rows.push_back(point_row(t, x));
        jrows.push_back(point_json(t, x));
    }
    return render("central", json{{"tmin", tmin}, {"tmax", tmax}, {"samples", samples}}, fmt,
                  {"t", "x0", "x1", "x2", "x3"}, rows, jrows);
}

std::string export_projective(std::int64_t steps, ExportFormat fmt) {
    std::array<Vec4d, 4> anchors = {Vec4d(1, 0, 0, 0), Vec4d(0, 1, 0, 0), Vec4d(0, 0, 1, 0),
                                    Vec4d(0, 0, 0, 1)};
    auto pts = projective_sequence(anchors, steps);
    std::vector<Row> rows;
    json jrows = json::array();
    for (std::size_t n = 0; n < pts.size(); ++n) {
        const Vec4d& x = pts[n];
        rows.push_back({std::to_string(n), format_double(x[0]), format_double(x[1]),
                        format_double(x[2]), format_double(x[3])});
        jrows.push_back(json{{"n", n}, {"x", vec4d_json(x)}});
    }
    return render("projective", json{{"steps", steps}}, fmt, {"n", "x0", "x1", "x2", "x3"},
                  rows, jrows);
}

std::string export_directions(std::int64_t n_max, ExportFormat fmt) {
    auto samples = direction_samples(n_max);
    std::vector<Row> rows;
    json jrows = json::array();
    for (const auto& s : samples) {
        rows.push_back({std::to_string(s.m), std::to_string(s.n), format_double(s.direction[0]),
                        format_double(s.direction[1]), format_double(s.direction[2]),
                        format_double(s.direction[3])});
        jrows.push_back(json{{"m", s.m}, {"n", s.n}, {"x", vec4d_json(s.direction)}});
    }
    return render("directions", json{{"nmax", n_max}}, fmt, {"m", "n", "x0", "x1", "x2", "x3"},
                  rows, jrows);
}

}  // namespace qh
