#pragma once

// Deterministic JSON / CSV emitters for the CLI. Field order is fixed by the
// caller; floating-point values are written with 17 significant digits.

#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace pdm::cli {

std::string format_number(double v);
std::string quote(std::string_view s);

/// Minimal ordered JSON value tree.
class Json {
 public:
  using Object = std::vector<std::pair<std::string, Json>>;
  using Array = std::vector<Json>;

  Json() : value_(nullptr) {}
  Json(double v) : value_(v) {}
  Json(int v) : value_(static_cast<long long>(v)) {}
  Json(long long v) : value_(v) {}
  Json(bool v) : value_(v) {}
  Json(const char* s) : value_(std::string(s)) {}
  Json(std::string s) : value_(std::move(s)) {}
  Json(Object o) : value_(std::move(o)) {}
  Json(Array a) : value_(std::move(a)) {}

  static Json object() { return Json(Object{}); }
  static Json array() { return Json(Array{}); }

  /// Appends a key (objects) or element (arrays).
  Json& add(std::string key, Json v);
  Json& push(Json v);

  void write(std::ostream& os, int indent = 0) const;

 private:
  std::variant<std::nullptr_t, double, long long, bool, std::string, Object, Array> value_;
};

/// RFC-4180 CSV: header row then data rows, CRLF line endings.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

  void add_row(std::vector<std::string> cells) { rows_.push_back(std::move(cells)); }
  void write(std::ostream& os) const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

}  // namespace pdm::cli
