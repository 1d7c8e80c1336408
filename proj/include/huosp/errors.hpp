#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace huosp {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// An item was looked up in an external utility table that has no entry for it.
class UnknownItemError : public Error {
public:
    explicit UnknownItemError(const std::string& item)
        : Error("unknown item '" + item + "' (no external utility)"), item_(item) {}
    const std::string& item() const { return item_; }

private:
    std::string item_;
};

/// A pattern was required to occur in a sequence but does not.
class NoOccurrenceError : public Error {
public:
    NoOccurrenceError() : Error("pattern has no occurrence in sequence") {}
};

/// A sequence with zero total utility cannot be used as an occupancy denominator.
class ZeroUtilitySequenceError : public Error {
public:
    ZeroUtilitySequenceError() : Error("sequence has zero utility") {}
};

class PositionOutOfRangeError : public Error {
public:
    PositionOutOfRangeError(std::size_t p, std::size_t len)
        : Error("position " + std::to_string(p) + " out of range 1.." + std::to_string(len)) {}
};

/// Width-pruning bounds require t to be a one-item extension of its generator l.
class NotAGeneratorError : public Error {
public:
    NotAGeneratorError() : Error("pattern is not a one-item extension of the given generator") {}
};

class InvalidThresholdsError : public Error {
public:
    explicit InvalidThresholdsError(const std::string& what) : Error(what) {}
};

class IllegalExtensionError : public Error {
public:
    explicit IllegalExtensionError(const std::string& what) : Error(what) {}
};

class LimitsExceededError : public Error {
public:
    explicit LimitsExceededError(const std::string& what) : Error(what) {}
};

class InvalidParamsError : public Error {
public:
    explicit InvalidParamsError(const std::string& what) : Error(what) {}
};

/// Syntax or structural error in an input file, with 1-based line/column.
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& reason)
        : Error("parse error at line " + std::to_string(line) + ", column " +
                std::to_string(column) + ": " + reason),
          line_(line), column_(column), reason_(reason) {}
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }
    const std::string& reason() const { return reason_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::string reason_;
};

/// A declared per-sequence utility disagrees with the recomputed one.
class UtilityMismatchError : public Error {
public:
    UtilityMismatchError(std::int64_t sid, double declared, double computed)
        : Error("sequence " + std::to_string(sid) + ": declared utility " +
                std::to_string(declared) + " != computed " + std::to_string(computed)),
          sid_(sid), declared_(declared), computed_(computed) {}
    std::int64_t sid() const { return sid_; }
    double declared() const { return declared_; }
    double computed() const { return computed_; }

private:
    std::int64_t sid_;
    double declared_;
    double computed_;
};

class IoError : public Error {
public:
    explicit IoError(const std::string& what) : Error(what) {}
};

}  // namespace huosp
