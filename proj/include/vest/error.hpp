#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace vest {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ArithmeticError : public Error {
public:
    using Error::Error;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

class IndexError : public Error {
public:
    using Error::Error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// A reduction-only evaluator was handed an instance its witness does not describe.
class LayoutMismatch : public Error {
public:
    using Error::Error;
};

/// An evaluator refused to start (or stopped) because the work exceeds its budget.
class BudgetExceeded : public Error {
public:
    BudgetExceeded(std::string const& what, std::uint64_t budget)
        : Error(what)
        , budget_(budget)
    {
    }

    std::uint64_t budget() const noexcept { return budget_; }

private:
    std::uint64_t budget_;
};

enum class ParseErrorKind {
    malformed,
    missing_header,
    duplicate_header,
    self_loop,
    duplicate_edge,
    endpoint_out_of_range,
    edge_count_mismatch,
    unsupported_version,
    bad_rational,
    entry_out_of_range,
    duplicate_entry,
};

inline std::string_view to_string(ParseErrorKind kind)
{
    switch (kind) {
    case ParseErrorKind::malformed: return "malformed line";
    case ParseErrorKind::missing_header: return "missing header";
    case ParseErrorKind::duplicate_header: return "duplicate header";
    case ParseErrorKind::self_loop: return "self-loop";
    case ParseErrorKind::duplicate_edge: return "duplicate edge";
    case ParseErrorKind::endpoint_out_of_range: return "endpoint out of range";
    case ParseErrorKind::edge_count_mismatch: return "edge count mismatch";
    case ParseErrorKind::unsupported_version: return "unsupported version";
    case ParseErrorKind::bad_rational: return "malformed rational";
    case ParseErrorKind::entry_out_of_range: return "entry out of range";
    case ParseErrorKind::duplicate_entry: return "duplicate entry";
    }
    return "parse error";
}

class ParseError : public Error {
public:
    ParseError(ParseErrorKind kind, std::size_t line, std::string const& detail)
        : Error("line " + std::to_string(line) + ": " + std::string(to_string(kind))
                + (detail.empty() ? std::string() : ": " + detail))
        , kind_(kind)
        , line_(line)
    {
    }

    ParseErrorKind kind() const noexcept { return kind_; }
    std::size_t line() const noexcept { return line_; }

private:
    ParseErrorKind kind_;
    std::size_t line_;
};

} // namespace vest
