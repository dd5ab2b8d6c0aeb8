#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hubmdl {

/// Base of every error raised by the library. The CLI maps all of these to
/// exit status 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of a function (k > n, N = 0, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Degree sequence cannot come from a simple directed graph.
class FeasibilityError : public Error {
public:
    FeasibilityError(const std::string& what, std::size_t index)
        : Error(what), index_(index) {}

    /// Offending node index, or npos when the total edge count is the problem.
    std::size_t index() const noexcept { return index_; }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    std::size_t index_;
};

/// Malformed edge-list line.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Well-formed input carrying an unacceptable value (zero weight, ...).
class ValueError : public Error {
public:
    using Error::Error;
};

/// Invalid model or experiment parameter.
class ParameterError : public Error {
public:
    using Error::Error;
};

/// Instance too large for an exhaustive routine.
class SizeError : public Error {
public:
    using Error::Error;
};

}  // namespace hubmdl
