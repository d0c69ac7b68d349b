#ifndef PETRIAL_ERRORS_HPP
#define PETRIAL_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace petrial {

// Caller passed a value outside the operation's domain (unknown vertex,
// unknown edge label, malformed inline input).
class InvalidInputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A stated precondition was violated (e.g. deleting an unmarked vertex of a
// graft, or asking for a path witness of a non-path).
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// An enumeration would exceed the configured size guard.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Something that the underlying theory guarantees cannot happen, happened.
class InternalInvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Text input (edge list, chord diagram, certificate) failed to parse.
// Carries the 1-based line number and the offending token when known.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t line, std::string token = {})
        : std::runtime_error("line " + std::to_string(line) + ": " + message +
                             (token.empty() ? "" : " ('" + token + "')")),
          line_(line),
          token_(std::move(token)) {}

    std::size_t line() const { return line_; }
    const std::string& token() const { return token_; }

private:
    std::size_t line_;
    std::string token_;
};

} // namespace petrial

#endif
