#pragma once

#include <stdexcept>
#include <string>

namespace overdet {

// Base class for all library errors.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A documented precondition of an operation was violated by the caller.
class PreconditionError : public Error {
  public:
    explicit PreconditionError(const std::string& msg) : Error(msg) {}
};

// Input exceeds a hard size cap (e.g. subset enumeration bound).
class CapacityError : public Error {
  public:
    explicit CapacityError(const std::string& msg) : Error(msg) {}
};

// Malformed input document; `path` points at the offending field.
class ParseError : public Error {
  public:
    ParseError(const std::string& msg, std::string path_in)
        : Error(msg), path(std::move(path_in)) {}
    std::string path;
};

// An internal invariant failed; indicates a bug, not bad input.
class InternalError : public Error {
  public:
    explicit InternalError(const std::string& msg) : Error(msg) {}
};

}  // namespace overdet
