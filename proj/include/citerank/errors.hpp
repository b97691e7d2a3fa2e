#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace citerank {

// Base class for every failure raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input data. Carries the source name, 1-based line number and,
// when known, the offending column.
class ParseError : public Error {
public:
    ParseError(std::string source, std::size_t line, std::string column, const std::string& message)
        : Error(format(source, line, column, message)),
          source_(std::move(source)), line_(line), column_(std::move(column)) {}

    const std::string& source() const noexcept { return source_; }
    std::size_t line() const noexcept { return line_; }
    const std::string& column() const noexcept { return column_; }

private:
    static std::string format(const std::string& source, std::size_t line,
                              const std::string& column, const std::string& message) {
        std::string out = source;
        if (line > 0) {
            out += ':';
            out += std::to_string(line);
        }
        if (!column.empty()) {
            out += ": column '";
            out += column;
            out += '\'';
        }
        out += ": ";
        out += message;
        return out;
    }

    std::string source_;
    std::size_t line_ = 0;
    std::string column_;
};

// A corpus invariant does not hold.
class ValidationError : public Error {
public:
    using Error::Error;
};

// A run or generator configuration is unusable.
class ConfigError : public Error {
public:
    using Error::Error;
};

// Baseline lookup for a (year, category) group that the table does not cover.
class MissingGroupError : public Error {
public:
    MissingGroupError(int year, const std::string& category)
        : Error("no baseline group for year " + std::to_string(year) + ", category '" + category + "'"),
          year_(year), category_(category) {}

    int year() const noexcept { return year_; }
    const std::string& category() const noexcept { return category_; }

private:
    int year_;
    std::string category_;
};

// A publication was priced against a table that cannot have been computed
// from the same corpus.
class InconsistentBaselineError : public Error {
public:
    using Error::Error;
};

// Spearman correlation has no defined value for the given pairs.
class UndefinedCorrelationError : public Error {
public:
    using Error::Error;
};

} // namespace citerank
