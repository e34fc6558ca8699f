#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "qh/extremal.hpp"
#include "qh/types.hpp"

namespace qh {

using json = nlohmann::ordered_json;

/// Shortest decimal that round-trips the double (std::to_chars); the one
/// fixed float rendering used by every data file.
std::string format_double(double v);

/// {"num": .., "den": .., "value": ..} for exact ratios.
json ratio_json(const Ratio64& r);

json pair_record_json(const PairRecord& p);

json vec4d_json(const Vec4d& v);
json vec4i_json(const Vec4i& v);

/// Report metadata: command, parameters, library version.  Never includes
/// timing or thread counts, so identical invocations serialize identically.
json make_meta(const std::string& command, json parameters);

/// Serializes {"meta": .., "data": ..} with a trailing newline.
std::string render_report(const json& meta, const json& data);

/// Writes bytes to path; throws std::runtime_error on I/O failure.
void write_file(const std::string& path, const std::string& content);

/// Minimal CSV assembly: header + numeric rows, LF endings.
std::string csv_table(const std::vector<std::string>& header,
                      const std::vector<std::vector<std::string>>& rows);

inline constexpr const char* kLibraryVersion = "0.1.0";

}  // namespace qh
