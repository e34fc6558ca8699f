#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "qh/types.hpp"

namespace qh {

enum class ExportFormat { csv, json };

/// Sampled data files for the curve and its projections; every function
/// returns the complete file content (CSV or {"meta","data"} JSON).

/// S(t) on [tmin, tmax], `samples` evenly spaced parameters.
std::string export_curve(double tmin, double tmax, int samples, ExportFormat fmt);

/// Spherical projection over one closed loop [anchor, 16 anchor].
std::string export_sphere(double anchor, int samples, ExportFormat fmt);

/// Central projection S(t)/S_0(t) on [tmin, tmax], tmin > 0.
std::string export_central(double tmin, double tmax, int samples, ExportFormat fmt);

/// Projective point sequence with anchors u0..u3.
std::string export_projective(std::int64_t steps, ExportFormat fmt);

/// All pair directions up to n_max.
std::string export_directions(std::int64_t n_max, ExportFormat fmt);

}  // namespace qh
