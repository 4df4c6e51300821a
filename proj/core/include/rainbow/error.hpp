#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace rainbow {

enum class ErrorKind {
    parameter,         // caller passed values outside an operation's domain
    resource,          // an enumeration or search budget would be exceeded
    degenerate_input,  // geometric input is affinely dependent
    precondition,      // an object was used before the required validation
    validation,        // an instance failed a general-position or lambda check
    internal,          // a mathematical invariant failed; indicates a bug
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

struct ParameterError : Error {
    explicit ParameterError(const std::string& what) : Error(ErrorKind::parameter, what) {}
};

struct ResourceError : Error {
    explicit ResourceError(const std::string& what) : Error(ErrorKind::resource, what) {}
};

struct DegenerateInputError : Error {
    explicit DegenerateInputError(const std::string& what)
        : Error(ErrorKind::degenerate_input, what) {}
};

struct PreconditionError : Error {
    explicit PreconditionError(const std::string& what) : Error(ErrorKind::precondition, what) {}
};

/// Carries the offending vertex ids (e.g. three collinear points).
struct ValidationError : Error {
    ValidationError(const std::string& what, std::vector<std::uint32_t> witness)
        : Error(ErrorKind::validation, what), witness(std::move(witness)) {}

    std::vector<std::uint32_t> witness;
};

struct InternalError : Error {
    explicit InternalError(const std::string& what) : Error(ErrorKind::internal, what) {}
};

}  // namespace rainbow
