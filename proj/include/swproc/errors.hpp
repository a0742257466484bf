#pragma once

#include <stdexcept>
#include <string>

namespace swproc {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Filesystem operation failed (open, write, rename, ...).
class IoFailure : public Error {
public:
    explicit IoFailure(const std::string& what) : Error("io failure: " + what) {}
};

} // namespace swproc
