#pragma once

// JSONL persistence of CheckReports. One record per line:
//
//   {"p":int, "k":int, "claim":string, "status":string,
//    "witnesses":{name: decimal-string}, "elapsed_ms":int,
//    "g":int (optional), "detail":string (optional)}
//
// Big integers travel as decimal strings. CSV export is lossy: witness
// values longer than kCsvDigits are truncated with an overflow marker.

#include <iosfwd>
#include <string>
#include <vector>

#include "resdet/theorems.hpp"

namespace resdet {

enum class OutputFormat { kJsonl, kCsv };

std::string to_jsonl_line(const CheckReport& r);

/// Throws InvalidArgument when the line violates the schema.
CheckReport parse_jsonl_line(const std::string& line);

/// Reads every non-empty line.
std::vector<CheckReport> read_jsonl(std::istream& in);

/// Orders by (p, k, claim), then by serialized witnesses for claims that
/// occur more than once per (p, k), e.g. one Carlitz record per mu.
void sort_canonical(std::vector<CheckReport>& reports);

/// The JSONL line with elapsed_ms zeroed; equal for reruns of the same check.
std::string canonical_line(const CheckReport& r);

inline constexpr std::size_t kCsvDigits = 40;
std::string csv_number(const BigInt& v);
void write_csv(std::ostream& out, const std::vector<CheckReport>& reports);

}  // namespace resdet
