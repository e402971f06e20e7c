#pragma once

// Flat, ordered records and their JSON / CSV / human renderings.
// Reals are written with 17 significant digits; complex values become
// {"re": .., "im": ..} in JSON and <key>_re,<key>_im columns in CSV.

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "rkbch/types.hpp"

namespace rkbch {

enum class OutputFormat { kJson, kCsv, kHuman };

/// Parses "json", "csv" or "human". Throws DomainError otherwise.
OutputFormat parse_format(std::string_view name);

using FieldValue = std::variant<std::monostate, bool, std::int64_t, double, Complex, std::string>;

class Record {
 public:
  Record& set(std::string key, FieldValue value);

  const std::vector<std::pair<std::string, FieldValue>>& fields() const { return fields_; }
  const FieldValue* find(std::string_view key) const;

 private:
  std::vector<std::pair<std::string, FieldValue>> fields_;
};

std::string format_real(double x);

std::string to_json(const Record& r);
/// JSON array, one record per line.
std::string to_json(const std::vector<Record>& rows);
/// Header from the first row; every row must carry the same keys.
std::string to_csv(const std::vector<Record>& rows);
std::string to_human(const Record& r);
std::string to_human(const std::vector<Record>& rows);

std::string render(const Record& r, OutputFormat fmt);
std::string render(const std::vector<Record>& rows, OutputFormat fmt);

}  // namespace rkbch
