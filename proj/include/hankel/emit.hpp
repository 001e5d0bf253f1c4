#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hankel {

// Fixed 17-significant-digit decimal for doubles; value-identical runs give
// byte-identical artifacts.
std::string fmt_double(double x);

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

void emit_csv(std::ostream& out, const Table& t);
// Same fields as the CSV, every value as a string; deterministic key order.
void emit_json(std::ostream& out, const std::string& command, const Table& t);

}  // namespace hankel
