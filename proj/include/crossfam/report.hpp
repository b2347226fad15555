#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "crossfam/verdict.hpp"

namespace crossfam {

enum class OutputFormat { json, csv, human };

std::string_view to_string(OutputFormat f);
OutputFormat parse_format(std::string_view text);

// Record encodings. JSON Lines records are flat objects with the fields
//   claim, n, k, i, t, expected, observed, relation, attained_at, passed,
//   seed, note
// where absent optional parameters are null (t is omitted when unset) and
// integers above 2^53 are written as decimal strings.

std::string verdict_to_json(const Verdict& v);
/// Accepts both numeric and decimal-string integers.
/// Throws std::invalid_argument on malformed input.
Verdict verdict_from_json(std::string_view line);

std::string csv_header();
std::string verdict_to_csv(const Verdict& v);
/// Inverse of verdict_to_csv. Throws std::invalid_argument on malformed rows.
Verdict verdict_from_csv(std::string_view row);

std::string verdict_to_human(const Verdict& v);

struct RunSummary {
  std::size_t records = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;

  void add(const Verdict& v) {
    ++records;
    if (v.passed) {
      ++passed;
    } else {
      ++failed;
    }
  }
};

std::string summary_to_json(const RunSummary& s);
std::string summary_to_human(const RunSummary& s);

}  // namespace crossfam
