#pragma once

#include <json.hpp>

#include <string>

namespace iset {

using Json = nlohmann::ordered_json;

// Indented key-value rendering of a report tree; the JSON shape is the
// machine-readable twin.
std::string render_text(const Json& node);

} // namespace iset
