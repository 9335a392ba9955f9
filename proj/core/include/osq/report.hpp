#pragma once

#include <string>
#include <vector>

#include "osq/checks.hpp"

namespace osq {

enum class ReportFormat { JsonLines, Csv };

ReportFormat parse_format(const std::string& name);

// Serializes records (already sorted by check_id) byte-stably: fixed float
// formatting, complex values as "re+imi" strings, "\n" line ends. The
// runtime_ms field is emitted as 0 unless with_timings is set, so repeated
// seeded runs produce identical bytes.
std::string render_report(const std::vector<CheckRecord>& records, ReportFormat format,
                          bool with_timings = false);

void emit_report(const std::vector<CheckRecord>& records, ReportFormat format,
                 const std::string& path, bool with_timings = false);

std::vector<CheckRecord> parse_json_lines(const std::string& text);

}  // namespace osq
