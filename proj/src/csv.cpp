#include "citerank/csv.hpp"

#include <cstdio>

#include "citerank/errors.hpp"

namespace citerank {

std::vector<std::string> split_line(std::string_view line, char delimiter) {
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = line.find(delimiter, start);
        if (pos == std::string_view::npos) {
            cells.emplace_back(line.substr(start));
            break;
        }
        cells.emplace_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return cells;
}

std::vector<std::string> split_list(std::string_view cell, char separator) {
    return split_line(cell, separator);
}

std::string trim_copy(std::string_view s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && (s[b] == ' ' || s[b] == '\t')) ++b;
    while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t')) --e;
    return std::string(s.substr(b, e - b));
}

DelimitedReader::DelimitedReader(std::istream& in, std::string source_name, char delimiter)
    : in_(in), name_(std::move(source_name)), delim_(delimiter) {
    std::string line;
    if (!read_physical_line(line)) {
        throw ParseError(name_, 0, "", "empty input, expected a header row");
    }
    // Strip a UTF-8 BOM if present.
    if (line.size() >= 3 && line[0] == '\xEF' && line[1] == '\xBB' && line[2] == '\xBF') {
        line.erase(0, 3);
    }
    for (auto& cell : split_line(line, delim_)) {
        header_.push_back(trim_copy(cell));
    }
}

std::size_t DelimitedReader::column(std::string_view name) const {
    for (std::size_t i = 0; i < header_.size(); ++i) {
        if (header_[i] == name) return i;
    }
    throw ParseError(name_, 1, std::string(name), "required column missing from header");
}

bool DelimitedReader::next_row(std::vector<std::string>& cells) {
    std::string line;
    while (read_physical_line(line)) {
        if (line.empty()) continue;  // skip blank lines
        raw_ = line;
        cells.clear();
        for (auto& cell : split_line(line, delim_)) {
            cells.push_back(trim_copy(cell));
        }
        if (cells.size() != header_.size()) {
            throw ParseError(name_, line_, "",
                             "expected " + std::to_string(header_.size()) + " cells, found " +
                                 std::to_string(cells.size()));
        }
        return true;
    }
    return false;
}

bool DelimitedReader::read_physical_line(std::string& out) {
    if (!std::getline(in_, out)) return false;
    ++line_;
    if (!out.empty() && out.back() == '\r') out.pop_back();
    return true;
}

std::string format_fixed(double value, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
    return buf;
}

std::string join(const std::vector<std::string>& cells, char delimiter) {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out += delimiter;
        out += cells[i];
    }
    return out;
}

} // namespace citerank
