#include "ipmsort/report.hpp"

#include <charconv>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <system_error>

#include "json.hpp"

namespace ipmsort {
namespace {

using json = nlohmann::ordered_json;

template <class T>
std::string to_text(T value) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc()) throw std::runtime_error("number formatting failed");
  return std::string(buf, end);
}

template <class T>
std::string to_text(const std::optional<T>& value) {
  return value ? to_text(*value) : std::string();
}

template <class T>
T from_text(std::string_view field, std::string_view column) {
  T value{};
  const auto* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw std::runtime_error("bad value '" + std::string(field) + "' in column " +
                             std::string(column));
  }
  return value;
}

template <class T>
std::optional<T> optional_from_text(std::string_view field, std::string_view column) {
  if (field.empty()) return std::nullopt;
  return from_text<T>(field, column);
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = line.find(sep, start);
    out.push_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

template <class T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <class T>
std::optional<T> json_optional(const json& obj, const char* key) {
  const auto& v = obj.at(key);
  if (v.is_null()) return std::nullopt;
  return v.get<T>();
}

void write_csv(std::ostream& out, std::span<const BenchRecord> records) {
  out << kCsvHeader << '\n';
  for (const auto& r : records) {
    out << r.algo << ',' << to_text(r.n) << ',' << r.dist << ',' << to_text(r.seed) << ','
        << (r.rep ? to_text(*r.rep) : std::string("median")) << ',' << to_text(r.seconds) << ','
        << to_text(r.comparisons) << ',' << to_text(r.moves) << ',' << to_text(r.max_depth)
        << ',' << (r.verified ? "true" : "false") << ',' << to_text(r.corank_seconds) << ','
        << to_text(r.rotation_seconds) << '\n';
  }
}

void write_json(std::ostream& out, std::span<const BenchRecord> records) {
  json arr = json::array();
  for (const auto& r : records) {
    json obj;
    obj["algo"] = r.algo;
    obj["n"] = r.n;
    obj["dist"] = r.dist;
    obj["seed"] = r.seed;
    obj["rep"] = r.rep ? json(*r.rep) : json("median");
    obj["seconds"] = optional_json(r.seconds);
    obj["comparisons"] = optional_json(r.comparisons);
    obj["moves"] = optional_json(r.moves);
    obj["max_depth"] = optional_json(r.max_depth);
    obj["verified"] = r.verified;
    obj["corank_seconds"] = optional_json(r.corank_seconds);
    obj["rotation_seconds"] = optional_json(r.rotation_seconds);
    arr.push_back(std::move(obj));
  }
  out << arr.dump(2) << '\n';
}

std::vector<BenchRecord> read_csv(std::string_view text) {
  std::vector<BenchRecord> records;
  bool header_seen = false;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    auto line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view() : text.substr(eol + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (!header_seen) {
      if (line != kCsvHeader) throw std::runtime_error("unexpected CSV header");
      header_seen = true;
      continue;
    }
    const auto f = split(line, ',');
    if (f.size() != 12) {
      throw std::runtime_error("CSV line " + std::to_string(line_no) + ": expected 12 fields");
    }
    BenchRecord r;
    r.algo = std::string(f[0]);
    r.n = from_text<std::size_t>(f[1], "n");
    r.dist = std::string(f[2]);
    r.seed = from_text<std::uint64_t>(f[3], "seed");
    if (f[4] != "median") r.rep = from_text<std::size_t>(f[4], "rep");
    r.seconds = optional_from_text<double>(f[5], "seconds");
    r.comparisons = optional_from_text<std::uint64_t>(f[6], "comparisons");
    r.moves = optional_from_text<std::uint64_t>(f[7], "moves");
    r.max_depth = optional_from_text<std::size_t>(f[8], "max_depth");
    if (f[9] != "true" && f[9] != "false") throw std::runtime_error("bad verified field");
    r.verified = f[9] == "true";
    r.corank_seconds = optional_from_text<double>(f[10], "corank_seconds");
    r.rotation_seconds = optional_from_text<double>(f[11], "rotation_seconds");
    records.push_back(std::move(r));
  }
  if (!header_seen) throw std::runtime_error("missing CSV header");
  return records;
}

std::vector<BenchRecord> read_json(std::string_view text) {
  std::vector<BenchRecord> records;
  try {
    const json arr = json::parse(text);
    if (!arr.is_array()) throw std::runtime_error("JSON report must be an array");
    for (const auto& obj : arr) {
      BenchRecord r;
      r.algo = obj.at("algo").get<std::string>();
      r.n = obj.at("n").get<std::size_t>();
      r.dist = obj.at("dist").get<std::string>();
      r.seed = obj.at("seed").get<std::uint64_t>();
      const auto& rep = obj.at("rep");
      if (!(rep.is_string() && rep.get<std::string>() == "median")) r.rep = rep.get<std::size_t>();
      r.seconds = json_optional<double>(obj, "seconds");
      r.comparisons = json_optional<std::uint64_t>(obj, "comparisons");
      r.moves = json_optional<std::uint64_t>(obj, "moves");
      r.max_depth = json_optional<std::size_t>(obj, "max_depth");
      r.verified = obj.at("verified").get<bool>();
      r.corank_seconds = json_optional<double>(obj, "corank_seconds");
      r.rotation_seconds = json_optional<double>(obj, "rotation_seconds");
      records.push_back(std::move(r));
    }
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("malformed JSON report: ") + e.what());
  }
  return records;
}

}  // namespace

std::optional<ReportFormat> parse_report_format(std::string_view name) {
  if (name == "csv") return ReportFormat::Csv;
  if (name == "json") return ReportFormat::Json;
  return std::nullopt;
}

void emit_report(std::ostream& out, std::span<const BenchRecord> records, ReportFormat format) {
  if (format == ReportFormat::Csv) {
    write_csv(out, records);
  } else {
    write_json(out, records);
  }
  if (!out) throw std::runtime_error("failed to write report");
}

std::string emit_report(std::span<const BenchRecord> records, ReportFormat format) {
  std::ostringstream out;
  emit_report(out, records, format);
  return out.str();
}

std::vector<BenchRecord> parse_report(std::string_view text, ReportFormat format) {
  return format == ReportFormat::Csv ? read_csv(text) : read_json(text);
}

std::vector<BenchRecord> parse_report(std::string_view text) {
  const auto pos = text.find_first_not_of(" \t\r\n");
  const bool is_json = pos != std::string_view::npos && text[pos] == '[';
  return parse_report(text, is_json ? ReportFormat::Json : ReportFormat::Csv);
}

}  // namespace ipmsort
