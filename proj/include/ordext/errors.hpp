#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ordext {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two values built over different universes were combined.
class UniverseMismatchError : public Error {
public:
    using Error::Error;
};

/// Malformed input: bad labels, axiom violations, unparsable files.
class ValidationError : public Error {
public:
    using Error::Error;
};

class ParseError : public ValidationError {
public:
    ParseError(int line, const std::string& what)
        : ValidationError("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const noexcept { return line_; }

private:
    int line_;
};

/// A documented operation precondition does not hold for these arguments.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Requested enumeration exceeds the configured size cap.
class CapacityError : public Error {
public:
    using Error::Error;
};

/// No total preorder extension with the prescribed symmetric part exists.
/// Carries a witness cycle (element indices) of the composition S.P.S.
class NoExtensionError : public Error {
public:
    NoExtensionError(const std::string& what, std::vector<int> cycle)
        : Error(what), cycle_(std::move(cycle)) {}
    const std::vector<int>& cycle() const noexcept { return cycle_; }

private:
    std::vector<int> cycle_;
};

}  // namespace ordext
