#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mcdm {

class McdmError : public std::runtime_error {
public:
    explicit McdmError(const std::string& what) : std::runtime_error(what) {}
};

enum class ParseErrorKind {
    Syntax,         // malformed token, bad number, semantic violation
    RaggedRow,      // row/entry count does not match the header
    HeaderMismatch, // row labels differ from column labels (set or order)
};

class ParseError : public McdmError {
public:
    ParseError(ParseErrorKind kind, std::size_t line, std::size_t column,
               const std::string& message)
        : McdmError("parse error at line " + std::to_string(line) + ", column " +
                    std::to_string(column) + ": " + message),
          kind_(kind), line_(line), column_(column) {}

    ParseErrorKind kind() const { return kind_; }
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    ParseErrorKind kind_;
    std::size_t line_;
    std::size_t column_;
};

class ValidationError : public McdmError {
public:
    explicit ValidationError(const std::string& what) : McdmError(what) {}
};

class RiUnavailableError : public McdmError {
public:
    explicit RiUnavailableError(std::size_t order)
        : McdmError("no random index available for matrix order " +
                    std::to_string(order) +
                    "; supply one to compute a consistency ratio"),
          order_(order) {}

    std::size_t order() const { return order_; }

private:
    std::size_t order_;
};

class SeriesTooShortError : public McdmError {
public:
    SeriesTooShortError(const std::string& name, std::size_t length)
        : McdmError("series \"" + name + "\" has " + std::to_string(length) +
                    " point(s); at least two are needed to classify transitions") {}
};

class NoObservationsError : public McdmError {
public:
    NoObservationsError() : McdmError("no transitions to summarize") {}
};

class DegenerateWeightError : public McdmError {
public:
    explicit DegenerateWeightError(const std::string& what) : McdmError(what) {}
};

class IoError : public McdmError {
public:
    explicit IoError(const std::string& what) : McdmError(what) {}
};

} // namespace mcdm
