#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace wmp {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input that cannot be interpreted (bad weights, non-polynomial entries, ...).
class InvalidInput : public Error {
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

/// Division by the zero polynomial or the zero rational function.
class ZeroDivision : public Error {
public:
    using Error::Error;
};

/// A denominator vanishes at the evaluation point.
class PoleError : public Error {
public:
    explicit PoleError(const std::string& what, std::optional<std::size_t> row = {},
                       std::optional<std::size_t> col = {})
        : Error(what), row_(row), col_(col) {}

    std::optional<std::size_t> row() const { return row_; }
    std::optional<std::size_t> col() const { return col_; }

private:
    std::optional<std::size_t> row_;
    std::optional<std::size_t> col_;
};

/// A matrix whose inverse is required is singular over the rational-function field.
/// `stage` is the 1-based partition index, 0 when not tied to a stage.
class SingularityError : public Error {
public:
    SingularityError(const std::string& what, std::size_t stage)
        : Error(what), stage_(stage) {}
    std::size_t stage() const { return stage_; }

private:
    std::size_t stage_;
};

/// A weighted quadratic form that must be inverted vanishes identically.
class DegenerateWeightError : public Error {
public:
    DegenerateWeightError(const std::string& what, std::size_t stage)
        : Error(what), stage_(stage) {}
    std::size_t stage() const { return stage_; }

private:
    std::size_t stage_;
};

/// Syntax error in an entry or a matrix file. `offset` is 0-based within the entry text;
/// `row`/`col` are 1-based when the error comes from a matrix file.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset,
               std::optional<std::size_t> row = {}, std::optional<std::size_t> col = {})
        : Error(what), offset_(offset), row_(row), col_(col) {}

    std::size_t offset() const { return offset_; }
    std::optional<std::size_t> row() const { return row_; }
    std::optional<std::size_t> col() const { return col_; }

private:
    std::size_t offset_;
    std::optional<std::size_t> row_;
    std::optional<std::size_t> col_;
};

} // namespace wmp
