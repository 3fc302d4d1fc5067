#pragma once

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace coauth::csv {

// Quotes a field when it contains a comma, quote or line break.
std::string escape(std::string_view field);

// Splits one CSV line honoring double-quoted fields ("" inside quotes is a
// literal quote). Throws FormatError on an unterminated quote.
std::vector<std::string> split_line(std::string_view line);

// Round-trippable decimal form: 17 significant digits.
std::string format_double(double value);

// Strips a trailing '\r' left over from CRLF input.
void chomp(std::string& line);

// Writes through a sibling temporary file, then renames it into place.
void write_atomically(const std::filesystem::path& path,
                      const std::function<void(std::ostream&)>& body);

}  // namespace coauth::csv
