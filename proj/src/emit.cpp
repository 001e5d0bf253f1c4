#include "hankel/emit.hpp"

#include <cstdio>

#include "json.hpp"

namespace hankel {

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

void emit_csv(std::ostream& out, const Table& t) {
  for (size_t i = 0; i < t.header.size(); ++i) {
    out << t.header[i] << (i + 1 < t.header.size() ? "," : "");
  }
  out << '\n';
  for (const auto& row : t.rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      out << row[i] << (i + 1 < row.size() ? "," : "");
    }
    out << '\n';
  }
}

void emit_json(std::ostream& out, const std::string& command, const Table& t) {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json r;
    for (size_t i = 0; i < t.header.size() && i < row.size(); ++i) {
      r[t.header[i]] = row[i];
    }
    j["rows"].push_back(std::move(r));
  }
  out << j.dump(2) << '\n';
}

}  // namespace hankel
