#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace hatecode {

struct CsvRecord {
  std::vector<std::string> fields;
  std::size_t line = 0;  // physical line the record starts on, 1-based
};

// RFC-4180 reader: comma separators, optional double-quoted fields with ""
// escapes, fields may contain embedded newlines when quoted. Accepts LF and
// CRLF line endings. Throws ParseError on stray quotes or garbage after a
// closing quote.
std::vector<CsvRecord> read_csv(std::istream& in);

// Quotes a field only when it contains a comma, quote, CR or LF.
std::string csv_escape(const std::string& field);

void write_csv_row(std::ostream& out, const std::vector<std::string>& fields);

}  // namespace hatecode
