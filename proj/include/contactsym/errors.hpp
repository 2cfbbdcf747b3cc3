#pragma once

#include <stdexcept>
#include <string>

namespace contactsym {

/// Base class of every exception thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Operands built over different base dimensions (mismatched n), or a
/// point/exponent vector of the wrong length.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Variable index outside [0, 2(2n+1)).
class IndexError : public Error {
public:
    using Error::Error;
};

/// Input of the wrong kind: fiber variables where a density was expected,
/// a non-homogeneous symbol where a homogeneous one is required, etc.
class DomainError : public Error {
public:
    using Error::Error;
};

/// S-graded symbol fed to an operator that needs the R grading (or the
/// other way around), or an ill-formed operator combination.
class GradingError : public Error {
public:
    using Error::Error;
};

/// Symbol-file syntax error; carries the 1-based position of the offence.
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line, int col)
        : Error(what + " (line " + std::to_string(line) + ", column " +
                std::to_string(col) + ")"),
          line_(line),
          col_(col) {}

    int line() const { return line_; }
    int col() const { return col_; }

private:
    int line_;
    int col_;
};

}  // namespace contactsym
