#include "netalg/csv.hpp"

#include <cstdio>
#include <fstream>

#include "netalg/errors.hpp"

namespace netalg {

CsvCell::CsvCell(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  text = buf;
}

namespace {

std::string escape(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string render_csv(const std::vector<std::string>& header, const std::vector<CsvRow>& rows) {
  std::string out;
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) out += ',';
    out += escape(header[i]);
  }
  out += '\n';
  for (const auto& row : rows) {
    if (row.size() != header.size())
      throw NumericError("csv row arity " + std::to_string(row.size()) +
                         " does not match header arity " + std::to_string(header.size()));
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += escape(row[i].text);
    }
    out += '\n';
  }
  return out;
}

void export_csv(const std::vector<std::string>& header, const std::vector<CsvRow>& rows,
                const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw NumericError("cannot open '" + path + "' for writing");
  f << render_csv(header, rows);
  if (!f) throw NumericError("write to '" + path + "' failed");
}

}  // namespace netalg
