#include "rkbch/report.hpp"

#include <fmt/format.h>

#include <cmath>
#include <stdexcept>

#include "rkbch/errors.hpp"

namespace rkbch {

OutputFormat parse_format(std::string_view name) {
  if (name == "json") return OutputFormat::kJson;
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "human") return OutputFormat::kHuman;
  throw DomainError(fmt::format("unknown output format '{}'", name));
}

Record& Record::set(std::string key, FieldValue value) {
  for (auto& [k, v] : fields_) {
    if (k == key) {
      v = std::move(value);
      return *this;
    }
  }
  fields_.emplace_back(std::move(key), std::move(value));
  return *this;
}

const FieldValue* Record::find(std::string_view key) const {
  for (const auto& [k, v] : fields_)
    if (k == key) return &v;
  return nullptr;
}

std::string format_real(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return fmt::format("{:.17g}", x);
}

namespace {

std::string json_real(double x) { return std::isfinite(x) ? format_real(x) : "null"; }

std::string json_string(std::string_view s) {
  std::string out = "\"";
  for (const char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20)
          out += fmt::format("\\u{:04x}", static_cast<unsigned>(ch));
        else
          out += ch;
    }
  }
  return out + "\"";
}

struct JsonValue {
  std::string operator()(std::monostate) const { return "null"; }
  std::string operator()(bool b) const { return b ? "true" : "false"; }
  std::string operator()(std::int64_t i) const { return std::to_string(i); }
  std::string operator()(double x) const { return json_real(x); }
  std::string operator()(const Complex& z) const {
    return fmt::format("{{\"re\": {}, \"im\": {}}}", json_real(z.real()), json_real(z.imag()));
  }
  std::string operator()(const std::string& s) const { return json_string(s); }
};

std::string csv_cell(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (const char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

struct TextValue {
  std::string operator()(std::monostate) const { return ""; }
  std::string operator()(bool b) const { return b ? "true" : "false"; }
  std::string operator()(std::int64_t i) const { return std::to_string(i); }
  std::string operator()(double x) const { return format_real(x); }
  std::string operator()(const Complex& z) const {
    return fmt::format("{}{}{}i", format_real(z.real()), std::signbit(z.imag()) ? "-" : "+",
                       format_real(std::abs(z.imag())));
  }
  std::string operator()(const std::string& s) const { return s; }
};

}  // namespace

std::string to_json(const Record& r) {
  std::string out = "{";
  bool first = true;
  for (const auto& [k, v] : r.fields()) {
    if (!first) out += ", ";
    first = false;
    out += json_string(k) + ": " + std::visit(JsonValue{}, v);
  }
  return out + "}";
}

std::string to_json(const std::vector<Record>& rows) {
  if (rows.empty()) return "[]\n";
  std::string out = "[\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out += "  " + to_json(rows[i]);
    out += i + 1 < rows.size() ? ",\n" : "\n";
  }
  return out + "]\n";
}

std::string to_csv(const std::vector<Record>& rows) {
  if (rows.empty()) return "";
  const auto& head = rows.front().fields();
  // A column is complex if any row stores a complex value in it.
  std::vector<bool> is_complex(head.size(), false);
  for (const auto& row : rows) {
    if (row.fields().size() != head.size())
      throw std::logic_error("to_csv: rows carry different columns");
    for (std::size_t c = 0; c < head.size(); ++c) {
      if (row.fields()[c].first != head[c].first)
        throw std::logic_error("to_csv: column order differs");
      if (std::holds_alternative<Complex>(row.fields()[c].second)) is_complex[c] = true;
    }
  }

  std::vector<std::string> cells;
  const auto flush = [&](std::string& out) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += cells[i];
    }
    out += '\n';
    cells.clear();
  };

  std::string out;
  for (std::size_t c = 0; c < head.size(); ++c) {
    if (is_complex[c]) {
      cells.push_back(csv_cell(head[c].first + "_re"));
      cells.push_back(csv_cell(head[c].first + "_im"));
    } else {
      cells.push_back(csv_cell(head[c].first));
    }
  }
  flush(out);
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < head.size(); ++c) {
      const FieldValue& v = row.fields()[c].second;
      if (is_complex[c]) {
        const Complex* z = std::get_if<Complex>(&v);
        cells.push_back(z ? format_real(z->real()) : "");
        cells.push_back(z ? format_real(z->imag()) : "");
      } else {
        cells.push_back(csv_cell(std::visit(TextValue{}, v)));
      }
    }
    flush(out);
  }
  return out;
}

std::string to_human(const Record& r) {
  std::size_t width = 0;
  for (const auto& [k, v] : r.fields()) width = std::max(width, k.size());
  std::string out;
  for (const auto& [k, v] : r.fields())
    out += fmt::format("{:<{}}  {}\n", k, width, std::visit(TextValue{}, v));
  return out;
}

std::string to_human(const std::vector<Record>& rows) {
  std::string out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) out += '\n';
    out += to_human(rows[i]);
  }
  return out;
}

std::string render(const Record& r, OutputFormat fmt) {
  switch (fmt) {
    case OutputFormat::kJson: return to_json(r) + "\n";
    case OutputFormat::kCsv: return to_csv({r});
    case OutputFormat::kHuman: return to_human(r);
  }
  return {};
}

std::string render(const std::vector<Record>& rows, OutputFormat fmt) {
  switch (fmt) {
    case OutputFormat::kJson: return to_json(rows);
    case OutputFormat::kCsv: return to_csv(rows);
    case OutputFormat::kHuman: return to_human(rows);
  }
  return {};
}

}  // namespace rkbch
