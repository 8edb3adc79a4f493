#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ipmsort {

/// One benchmark measurement, or the median summary of a set of reps
/// (rep == nullopt). Optional fields are absent when not measured: counts
/// outside count mode, phase seconds outside attribution mode, and every
/// timing of a run that failed verification.
struct BenchRecord {
  std::string algo;
  std::size_t n = 0;
  std::string dist;
  std::uint64_t seed = 0;
  std::optional<std::size_t> rep;
  std::optional<double> seconds;
  std::optional<std::uint64_t> comparisons;
  std::optional<std::uint64_t> moves;
  std::optional<std::size_t> max_depth;
  bool verified = false;
  std::optional<double> corank_seconds;
  std::optional<double> rotation_seconds;

  bool is_summary() const noexcept { return !rep.has_value(); }

  friend bool operator==(const BenchRecord&, const BenchRecord&) = default;
};

enum class ReportFormat { Csv, Json };

std::optional<ReportFormat> parse_report_format(std::string_view name);

/// CSV header, columns in output order.
inline constexpr std::string_view kCsvHeader =
    "algo,n,dist,seed,rep,seconds,comparisons,moves,max_depth,verified,corank_seconds,"
    "rotation_seconds";

/// Writes records as CSV (header + one line per record; absent values are
/// empty fields, summary rows carry rep "median") or as a JSON array of
/// objects keyed by the CSV column names (absent values are null).
/// Numbers are locale-independent and doubles round-trip exactly.
void emit_report(std::ostream& out, std::span<const BenchRecord> records, ReportFormat format);
std::string emit_report(std::span<const BenchRecord> records, ReportFormat format);

/// Inverse of emit_report. Throws std::runtime_error on malformed input.
std::vector<BenchRecord> parse_report(std::string_view text, ReportFormat format);

/// Picks the format from the first non-blank character ('[' means JSON).
std::vector<BenchRecord> parse_report(std::string_view text);

}  // namespace ipmsort
