#pragma once

#include <stdexcept>
#include <string>

namespace solvgenus {

enum class ErrorKind {
    Parse,
    NotPrimitive,
    NotUnimodular,
    NotSL2,
    NotAnosov,
    TraceTooSmall,
    NotCommuting,
    NotStandardForm,
    NotExpressible,
    InconsistentWitness,
    NotUpperHalfPlane,
    VerticalAxis,
    VerificationFailed,
};

inline const char* error_name(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::NotPrimitive: return "NotPrimitive";
    case ErrorKind::NotUnimodular: return "NotUnimodular";
    case ErrorKind::NotSL2: return "NotSL2";
    case ErrorKind::NotAnosov: return "NotAnosov";
    case ErrorKind::TraceTooSmall: return "TraceTooSmall";
    case ErrorKind::NotCommuting: return "NotCommuting";
    case ErrorKind::NotStandardForm: return "NotStandardForm";
    case ErrorKind::NotExpressible: return "NotExpressible";
    case ErrorKind::InconsistentWitness: return "InconsistentWitness";
    case ErrorKind::NotUpperHalfPlane: return "NotUpperHalfPlane";
    case ErrorKind::VerticalAxis: return "VerticalAxis";
    case ErrorKind::VerificationFailed: return "VerificationFailed";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above so that
/// front ends can map it to an exit status without parsing messages.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_name(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace solvgenus
