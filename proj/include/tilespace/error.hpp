#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tilespace {

/** Base class of every error thrown by the library. */
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DecorationError : public Error {
public:
    using Error::Error;
};

class MalformedTile : public Error {
public:
    using Error::Error;
};

class MalformedEdge : public Error {
public:
    using Error::Error;
};

class MalformedVertex : public Error {
public:
    using Error::Error;
};

/** CSV or rules-file syntax problem; line and column are 1-based. */
class ParseError : public Error {
public:
    ParseError(std::string source, std::size_t line, std::size_t column, const std::string& what)
        : Error(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + what),
          source_(std::move(source)), line_(line), column_(column) {}

    const std::string& source() const { return source_; }
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::string source_;
    std::size_t line_;
    std::size_t column_;
};

/** Structurally invalid dataset: duplicates, gaps, non-canonical rows, dangling children. */
class DatasetError : public Error {
public:
    using Error::Error;
};

/** A derivation step (layout, placement, orientation, chain maps) found no consistent answer. */
class DerivationError : public Error {
public:
    using Error::Error;
};

class SubstitutionError : public Error {
public:
    using Error::Error;
};

class ThreadError : public Error {
public:
    using Error::Error;
};

}  // namespace tilespace
