#pragma once

#include <string>

#include <json.hpp>

namespace rigidity::cli {

using Report = nlohmann::ordered_json;

/// Text rendering of a report: "key: value" per line; nested structures indent.
std::string render_text(const Report& r);

}  // namespace rigidity::cli
