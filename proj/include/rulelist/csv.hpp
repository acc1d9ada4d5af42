#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rulelist {

using CsvRow = std::vector<std::string>;

/// RFC-4180-style CSV reader: quoted fields, doubled quotes, embedded
/// commas/newlines, CRLF or LF line endings. Returns every record
/// including the header row. Throws DataError on unreadable files or
/// quoting errors.
std::vector<CsvRow> read_csv(const std::string& path);
std::vector<CsvRow> parse_csv(std::istream& in, const std::string& origin);

/// Quotes a field if it contains a comma, quote or newline.
std::string csv_escape(const std::string& field);

std::string join_csv_row(const CsvRow& row);

}  // namespace rulelist
