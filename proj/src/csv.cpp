#include "hatecode/csv.hpp"

#include <istream>
#include <ostream>

#include "hatecode/errors.hpp"

namespace hatecode {

std::vector<CsvRecord> read_csv(std::istream& in) {
  std::vector<CsvRecord> records;
  std::string field;
  CsvRecord current;
  std::size_t line = 1;
  current.line = 1;
  bool in_quotes = false;
  bool field_was_quoted = false;
  bool record_has_content = false;

  auto end_field = [&]() {
    current.fields.push_back(field);
    field.clear();
    field_was_quoted = false;
  };
  auto end_record = [&]() {
    end_field();
    records.push_back(std::move(current));
    current = CsvRecord{};
    current.line = line;
    record_has_content = false;
  };

  char c;
  while (in.get(c)) {
    if (in_quotes) {
      if (c == '"') {
        if (in.peek() == '"') {
          in.get(c);
          field += '"';
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line;
        field += c;
      }
      continue;
    }
    switch (c) {
      case '"':
        if (!field.empty() || field_was_quoted) {
          throw ParseError(line, "unexpected quote inside unquoted field");
        }
        in_quotes = true;
        field_was_quoted = true;
        record_has_content = true;
        break;
      case ',':
        end_field();
        record_has_content = true;
        break;
      case '\r':
        if (in.peek() == '\n') break;  // handled by the \n branch
        throw ParseError(line, "bare carriage return");
      case '\n':
        ++line;
        if (record_has_content || !field.empty() || !current.fields.empty()) {
          end_record();
        } else {
          current.line = line;  // skip empty line
        }
        break;
      default:
        if (field_was_quoted) {
          throw ParseError(line, "data after closing quote");
        }
        field += c;
        record_has_content = true;
        break;
    }
  }
  if (in_quotes) {
    throw ParseError(line, "unterminated quoted field");
  }
  if (record_has_content || !field.empty() || !current.fields.empty()) {
    end_record();
  }
  return records;
}

std::string csv_escape(const std::string& field) {
  bool needs_quotes = false;
  for (char c : field) {
    if (c == ',' || c == '"' || c == '\r' || c == '\n') {
      needs_quotes = true;
      break;
    }
  }
  if (!needs_quotes) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void write_csv_row(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out << ',';
    out << csv_escape(fields[i]);
  }
  out << '\n';
}

}  // namespace hatecode
