#pragma once

#include <stdexcept>
#include <string>

namespace turan
{
    /// Base class for every error raised by the library.
    class Error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    /// DSL syntax or resolution failure, located at a 1-based line/column.
    class ParseError : public Error
    {
    public:
        ParseError(const std::string & message, int line, int column);

        int line() const noexcept { return line_; }
        int column() const noexcept { return column_; }

    private:
        int line_;
        int column_;
    };

    class LanguageMismatch : public Error
    {
    public:
        using Error::Error;
    };

    /// Unreadable input file.
    class InputError : public Error
    {
    public:
        using Error::Error;
    };

    /// Raised when an internal consistency check fails; never caused by bad input.
    class InvariantViolation : public Error
    {
    public:
        using Error::Error;
    };
}
