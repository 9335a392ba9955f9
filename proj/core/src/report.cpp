#include "osq/report.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace osq {

namespace {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

// complex rendered as "re" or "re+imi" / "re-imi"
std::string format_value(cdouble v) {
  if (v.imag() == 0.0) return format_double(v.real());
  const std::string re = format_double(v.real());
  const std::string im = format_double(std::abs(v.imag()));
  return re + (v.imag() >= 0.0 ? "+" : "-") + im + "i";
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

}  // namespace

ReportFormat parse_format(const std::string& name) {
  if (name == "json" || name == "json-lines" || name == "jsonl") return ReportFormat::JsonLines;
  if (name == "csv") return ReportFormat::Csv;
  throw std::invalid_argument("unknown report format '" + name + "'");
}

std::string render_report(const std::vector<CheckRecord>& records, ReportFormat format,
                          bool with_timings) {
  std::string out;
  if (format == ReportFormat::Csv)
    out += "check_id,paper_anchor,computed,expected,tolerance,verdict,runtime_ms\n";
  for (const auto& r : records) {
    const double ms = with_timings ? r.runtime_ms : 0.0;
    if (format == ReportFormat::JsonLines) {
      nlohmann::ordered_json j;
      j["check_id"] = r.check_id;
      j["paper_anchor"] = r.paper_anchor;
      j["computed"] = format_value(r.computed);
      j["expected"] = format_value(r.expected);
      j["tolerance"] = format_double(r.tolerance);
      j["verdict"] = r.verdict;
      j["runtime_ms"] = format_double(ms);
      out += j.dump();
      out += "\n";
    } else {
      out += csv_quote(r.check_id) + "," + csv_quote(r.paper_anchor) + "," +
             format_value(r.computed) + "," + format_value(r.expected) + "," +
             format_double(r.tolerance) + "," + r.verdict + "," + format_double(ms) + "\n";
    }
  }
  return out;
}

void emit_report(const std::vector<CheckRecord>& records, ReportFormat format,
                 const std::string& path, bool with_timings) {
  if (records.empty()) throw std::invalid_argument("emit_report: no records");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("emit_report: cannot write " + path);
  out << render_report(records, format, with_timings);
}

std::vector<CheckRecord> parse_json_lines(const std::string& text) {
  std::vector<CheckRecord> out;
  std::size_t pos = 0;
  auto parse_value = [](const std::string& s) -> cdouble {
    // "re" or "re+imi"/"re-imi"
    if (!s.empty() && s.back() == 'i') {
      std::size_t split = s.size() - 1;
      int depth = 0;
      for (std::size_t i = s.size() - 1; i > 0; --i) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
          split = i;
          break;
        }
        (void)depth;
      }
      const double re = std::stod(s.substr(0, split));
      const double im = std::stod(s.substr(split, s.size() - split - 1));
      return cdouble(re, im);
    }
    return cdouble(std::stod(s), 0.0);
  };
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string::npos) end = text.size();
    const std::string line = text.substr(pos, end - pos);
    pos = end + 1;
    if (line.empty()) continue;
    nlohmann::json j = nlohmann::json::parse(line);
    CheckRecord r;
    r.check_id = j.at("check_id").get<std::string>();
    r.paper_anchor = j.at("paper_anchor").get<std::string>();
    r.computed = parse_value(j.at("computed").get<std::string>());
    r.expected = parse_value(j.at("expected").get<std::string>());
    r.tolerance = std::stod(j.at("tolerance").get<std::string>());
    r.verdict = j.at("verdict").get<std::string>();
    r.runtime_ms = std::stod(j.at("runtime_ms").get<std::string>());
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace osq
