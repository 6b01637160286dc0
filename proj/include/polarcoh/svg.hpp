#ifndef POLARCOH_SVG_HPP
#define POLARCOH_SVG_HPP

#include <json.hpp>

#include <string>

namespace polarcoh {

/// Renders a Newton polygon (solid) and optionally a Hodge polygon (dashed)
/// given as serialized vertex lists [[x, "num/den"], ...]. Pass a null JSON
/// value to omit the Hodge polygon. Output depends only on the inputs.
std::string render_polygons_svg(const nlohmann::json& newton, const nlohmann::json& hodge,
                                const std::string& title);

}  // namespace polarcoh

#endif  // POLARCOH_SVG_HPP
