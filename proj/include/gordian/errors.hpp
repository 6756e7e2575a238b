#ifndef GORDIAN_ERRORS_HPP
#define GORDIAN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gordian {

// Malformed input text. Carries a 1-based line/column of the offending token
// when the parser knows it (0 means "not applicable").
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, int line = 0, int col = 0)
        : std::runtime_error(format(msg, line, col)), line_(line), col_(col) {}

    int line() const { return line_; }
    int column() const { return col_; }

private:
    static std::string format(const std::string& msg, int line, int col) {
        if (line <= 0) return msg;
        return msg + " (line " + std::to_string(line) + ", column " + std::to_string(col) + ")";
    }

    int line_;
    int col_;
};

// Structurally invalid value: dangling arc labels, broken cycles,
// wrong component count for an operation, out-of-range indices.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// A configurable resource cap was exceeded. Never a silent approximation.
class ResourceLimitError : public std::runtime_error {
public:
    explicit ResourceLimitError(const std::string& msg) : std::runtime_error(msg) {}
};

// An internal consistency check failed; signals an implementation bug,
// not a user error.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace gordian

#endif  // GORDIAN_ERRORS_HPP
