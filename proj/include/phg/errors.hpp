#pragma once

#include <stdexcept>
#include <string>

namespace phg {

// Broad classes of failure. Everything here is a caller-facing domain error;
// internal invariant breakage uses Kind::Internal and maps to a distinct
// process exit code in the CLI.
enum class ErrorKind {
    Parse,        // malformed text input (rationals, JSON instances)
    Shape,        // structural mismatch (class counts, uniformity, arity)
    Domain,       // values outside the documented domain (weights, ranges)
    Selector,     // bad class/vertex selectors
    Infeasible,   // requested object cannot exist for these parameters
    Budget,       // construction or scan exceeds the configured size budget
    Internal,     // invariant or cross-check failure inside the library
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string message)
        : std::runtime_error(std::move(message)), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

inline const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Parse: return "parse";
        case ErrorKind::Shape: return "shape";
        case ErrorKind::Domain: return "domain";
        case ErrorKind::Selector: return "selector";
        case ErrorKind::Infeasible: return "infeasible";
        case ErrorKind::Budget: return "budget";
        case ErrorKind::Internal: return "internal";
    }
    return "unknown";
}

} // namespace phg
