#pragma once

// Minimal delimited-text I/O. No quoting: a cell must not contain the
// delimiter, the ';' list separator, or a line break. Multi-valued cells
// use ';' between values. Input is treated as UTF-8 bytes; a leading BOM
// and trailing '\r' are stripped.

#include <cstddef>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace citerank {

std::vector<std::string> split_line(std::string_view line, char delimiter);
std::vector<std::string> split_list(std::string_view cell, char separator = ';');
std::string trim_copy(std::string_view s);

class DelimitedReader {
public:
    // Reads the header row immediately; throws ParseError on an empty source.
    DelimitedReader(std::istream& in, std::string source_name, char delimiter = ',');

    // Column index for a header name; throws ParseError when absent.
    std::size_t column(std::string_view name) const;

    // Next non-blank row, cells trimmed. Returns false at end of input.
    // Throws ParseError when the cell count differs from the header.
    bool next_row(std::vector<std::string>& cells);

    std::size_t line_number() const noexcept { return line_; }
    const std::string& source_name() const noexcept { return name_; }
    const std::vector<std::string>& header() const noexcept { return header_; }

    // The last physical line as read (before splitting), for byte-level
    // duplicate detection.
    const std::string& raw_line() const noexcept { return raw_; }

private:
    bool read_physical_line(std::string& out);

    std::istream& in_;
    std::string name_;
    char delim_;
    std::vector<std::string> header_;
    std::string raw_;
    std::size_t line_ = 0;
};

// Fixed-point formatting with '.' as decimal separator regardless of locale.
std::string format_fixed(double value, int decimals);

std::string join(const std::vector<std::string>& cells, char delimiter);

} // namespace citerank
