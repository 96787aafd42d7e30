#pragma once

#include "iqinv/checks.hpp"

#include <json.hpp>

#include <string>

namespace iqinv {

enum class Format { Json, Csv, Text };

Format parse_format(const std::string& s);  // throws DomainError

nlohmann::ordered_json to_json(const CheckRecord& r);
CheckRecord record_from_json(const nlohmann::json& j);

// "passed/total"
std::string summary_line(const RunResult& r);
std::string render(const RunResult& r, Format f);

}  // namespace iqinv
