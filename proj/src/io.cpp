#include "qh/io.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace qh {

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

json ratio_json(const Ratio64& r) {
    return json{{"num", r.num}, {"den", r.den}, {"value", r.value()}};
}

json vec4d_json(const Vec4d& v) { return json{v[0], v[1], v[2], v[3]}; }
json vec4i_json(const Vec4i& v) { return json{v[0], v[1], v[2], v[3]}; }

json pair_record_json(const PairRecord& p) {
    return json{{"m", p.m},
                {"n", p.n},
                {"diff", vec4i_json(p.diff)},
                {"sq_dist", p.sq_dist},
                {"sq_ratio", ratio_json(p.sq_ratio)}};
}

json make_meta(const std::string& command, json parameters) {
    return json{{"command", command}, {"parameters", std::move(parameters)},
                {"version", kLibraryVersion}};
}

std::string render_report(const json& meta, const json& data) {
    json root{{"meta", meta}, {"data", data}};
    return root.dump(2) + "\n";
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::string csv_table(const std::vector<std::string>& header,
                      const std::vector<std::vector<std::string>>& rows) {
    std::string out;
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i) out.push_back(',');
        out += header[i];
    }
    out.push_back('\n');
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out.push_back(',');
            out += row[i];
        }
        out.push_back('\n');
    }
    return out;
}

}  // namespace qh
