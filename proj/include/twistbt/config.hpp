#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "twistbt/kuznetsov.hpp"
#include "twistbt/label_group.hpp"

namespace twistbt {

/// Builds a label group from its JSON description (see FORMATS.md).
LabelGroupPtr load_label_group(const nlohmann::json& config);
/// `source` is a file path, or inline JSON when it starts with '{'.
LabelGroupPtr load_label_group_from(const std::string& source);

/// {"generators": [...], "relators": [...]}
FinitePresentation load_presentation(const nlohmann::json& config);
FinitePresentation load_presentation_from(const std::string& source);

nlohmann::json read_json_source(const std::string& source);

}  // namespace twistbt
