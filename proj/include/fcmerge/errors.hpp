#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fcmerge {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed program or profile text. Positions are 1-based.
class SourceError : public Error {
  public:
    SourceError(std::size_t line, std::size_t column, const std::string& message, const std::string& source = "")
        : Error((source.empty() ? "" : source + ":") + std::to_string(line) + ":" + std::to_string(column) +
                ": " + message),
          line_(line), column_(column), message_(message), source_(source) {}

    /// The same error attributed to a named input such as a file path.
    SourceError in(const std::string& source) const { return SourceError(line_, column_, message_, source); }

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }
    const std::string& message() const noexcept { return message_; }
    const std::string& source() const noexcept { return source_; }

  private:
    std::size_t line_;
    std::size_t column_;
    std::string message_;
    std::string source_;
};

class InconsistentProgram : public Error {
  public:
    InconsistentProgram() : Error("program is inconsistent") {}
};

/// Maximal-subset enumeration refused: too many candidate rules.
class SizeLimitExceeded : public Error {
  public:
    SizeLimitExceeded(std::size_t candidates, std::size_t cap)
        : Error("maximal-subset enumeration over " + std::to_string(candidates) +
                " candidate rules exceeds the cap of " + std::to_string(cap)),
          candidates_(candidates), cap_(cap) {}

    std::size_t candidates() const noexcept { return candidates_; }
    std::size_t cap() const noexcept { return cap_; }

  private:
    std::size_t candidates_;
    std::size_t cap_;
};

class EmptyProfile : public Error {
  public:
    EmptyProfile() : Error("profile must contain at least one program") {}
};

class IncompleteBinding : public Error {
  public:
    using Error::Error;
};

class ConfigError : public Error {
  public:
    using Error::Error;
};

class PredicateNotHolding : public Error {
  public:
    PredicateNotHolding() : Error("shrink predicate does not hold on the input instance") {}
};

}  // namespace fcmerge
