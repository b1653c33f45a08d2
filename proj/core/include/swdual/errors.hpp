#pragma once

#include <stdexcept>
#include <string>

namespace swdual {

// Base class for all library errors.  Every throw site uses one of the
// derived classes below so callers can map failures to exit codes:
// UsageError -> 2, ResourceLimitError / IoError -> 3, everything else is a
// bug in the library or its inputs and surfaces as InternalError.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Bad user-supplied input: malformed field descriptor, out-of-range index,
// inconsistent command-line arguments.
class UsageError : public Error {
public:
    explicit UsageError(const std::string& what) : Error(what) {}
};

// A configured cap (tensor dimension, group order, factorial, field size,
// elimination size) would be exceeded.  The message names the cap and the
// offending value so scans can surface it as a skipped cell.
class ResourceLimitError : public Error {
public:
    explicit ResourceLimitError(const std::string& what) : Error(what) {}
};

// Filesystem failure while writing a report.
class IoError : public Error {
public:
    explicit IoError(const std::string& what) : Error(what) {}
};

// A mathematical precondition failed where the algorithms guarantee it
// cannot (e.g. an exact division with nonzero remainder, a singular
// interpolation system with distinct nodes).  Indicates a bug, never bad
// user input.
class InternalError : public Error {
public:
    explicit InternalError(const std::string& what) : Error(what) {}
};

// Requested operation is well-posed but outside what this build supports
// (e.g. enumerating an infinite group).
class UnsupportedError : public Error {
public:
    explicit UnsupportedError(const std::string& what) : Error(what) {}
};

} // namespace swdual
