#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "schwarz/suite.hpp"

namespace schwarz::report {

enum class Format { Jsonl, Csv, Text };

Format parse_format(std::string_view name);

/// One JSON object per result with keys id, theorem_id, passed, margin,
/// quantities, hypotheses, residuals, runtime_ms (plus check, expect,
/// outcome, detail, error).
nlohmann::json to_json(const suite::JobResult& r);

void emit(std::ostream& out, const std::vector<suite::JobResult>& results, Format format);
std::string emit(const std::vector<suite::JobResult>& results, Format format);

}  // namespace schwarz::report
