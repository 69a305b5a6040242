#pragma once

#include <stdexcept>
#include <string>

namespace lctforge {

// Input text did not conform to the ideal file grammar.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string msg, int line, int column)
        : std::runtime_error(msg + " (line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ")"),
          line_(line), column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

// The quotient O_n/I is not finite dimensional (staircase misses an axis).
class InfiniteColength : public std::runtime_error {
public:
    explicit InfiniteColength(const std::string& msg) : std::runtime_error(msg) {}
};

// A standard-basis run exceeded the configured degree cap. Reported, never
// silently truncated; distinct from InfiniteColength.
class DegreeCapExceeded : public std::runtime_error {
public:
    explicit DegreeCapExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

class DimensionMismatch : public std::invalid_argument {
public:
    explicit DimensionMismatch(const std::string& msg) : std::invalid_argument(msg) {}
};

// Internal consistency failure (two routes that must agree disagreed).
class InternalCheckFailure : public std::logic_error {
public:
    explicit InternalCheckFailure(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace lctforge
