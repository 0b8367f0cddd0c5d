#pragma once

#include <stdexcept>
#include <string>

namespace qalg {

// Domain error: mathematically invalid input or a violated precondition.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

// Malformed input document; carries the offending line number.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& where, int line, const std::string& what_arg)
        : std::runtime_error(where + ":" + std::to_string(line) + ": " + what_arg), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

} // namespace qalg
