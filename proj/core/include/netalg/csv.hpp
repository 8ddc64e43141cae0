#pragma once

#include <string>
#include <vector>

namespace netalg {

/// A CSV cell: either verbatim text or a double rendered with 17 significant
/// digits (exact round-trip).
struct CsvCell {
  std::string text;

  CsvCell(std::string s) : text(std::move(s)) {}
  CsvCell(const char* s) : text(s) {}
  CsvCell(double v);
  CsvCell(int v) : text(std::to_string(v)) {}
  CsvCell(long long v) : text(std::to_string(v)) {}
};

using CsvRow = std::vector<CsvCell>;

/// Renders rows under the given header as RFC-4180-style CSV: LF line
/// endings, '.' decimal separator, cells quoted only when needed. Throws
/// NumericError when a row's arity does not match the header.
std::string render_csv(const std::vector<std::string>& header, const std::vector<CsvRow>& rows);

/// Writes render_csv output to a file; throws NumericError on I/O failure.
void export_csv(const std::vector<std::string>& header, const std::vector<CsvRow>& rows,
                const std::string& path);

}  // namespace netalg
