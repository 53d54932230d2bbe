#include "output.hpp"

#include <cmath>
#include <cstdio>

namespace pdm::cli {

std::string format_number(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out + "\"";
}

Json& Json::add(std::string key, Json v) {
  std::get<Object>(value_).emplace_back(std::move(key), std::move(v));
  return *this;
}

Json& Json::push(Json v) {
  std::get<Array>(value_).push_back(std::move(v));
  return *this;
}

void Json::write(std::ostream& os, int indent) const {
  const std::string pad(std::size_t(indent + 2), ' ');
  const std::string close_pad(std::size_t(indent), ' ');
  if (std::holds_alternative<std::nullptr_t>(value_)) {
    os << "null";
  } else if (const auto* d = std::get_if<double>(&value_)) {
    os << format_number(*d);
  } else if (const auto* i = std::get_if<long long>(&value_)) {
    os << *i;
  } else if (const auto* b = std::get_if<bool>(&value_)) {
    os << (*b ? "true" : "false");
  } else if (const auto* s = std::get_if<std::string>(&value_)) {
    os << quote(*s);
  } else if (const auto* o = std::get_if<Object>(&value_)) {
    if (o->empty()) {
      os << "{}";
      return;
    }
    os << "{\n";
    for (std::size_t k = 0; k < o->size(); ++k) {
      os << pad << quote((*o)[k].first) << ": ";
      (*o)[k].second.write(os, indent + 2);
      os << (k + 1 < o->size() ? ",\n" : "\n");
    }
    os << close_pad << "}";
  } else if (const auto* a = std::get_if<Array>(&value_)) {
    if (a->empty()) {
      os << "[]";
      return;
    }
    os << "[\n";
    for (std::size_t k = 0; k < a->size(); ++k) {
      os << pad;
      (*a)[k].write(os, indent + 2);
      os << (k + 1 < a->size() ? ",\n" : "\n");
    }
    os << close_pad << "]";
  }
}

namespace {

std::string csv_cell(const std::string& cell) {
  if (cell.find_first_of(",\"\r\n") == std::string::npos) return cell;
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void write_row(std::ostream& os, const std::vector<std::string>& cells) {
  for (std::size_t k = 0; k < cells.size(); ++k) os << (k ? "," : "") << csv_cell(cells[k]);
  os << "\r\n";
}

}  // namespace

void CsvTable::write(std::ostream& os) const {
  write_row(os, header_);
  for (const auto& row : rows_) write_row(os, row);
}

}  // namespace pdm::cli
