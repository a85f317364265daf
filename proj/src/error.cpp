#include "zsramsey/error.hpp"

namespace zsramsey {

auto to_string(ErrorKind kind) -> std::string_view
{
    switch (kind) {
        case ErrorKind::InfeasibleParameters: return "InfeasibleParameters";
        case ErrorKind::InsufficientBlueprint: return "InsufficientBlueprint";
        case ErrorKind::NotPrime: return "NotPrime";
        case ErrorKind::ModulusMismatch: return "ModulusMismatch";
        case ErrorKind::Unreachable: return "Unreachable";
        case ErrorKind::HostTooSmall: return "HostTooSmall";
        case ErrorKind::PoolExhausted: return "PoolExhausted";
        case ErrorKind::PreconditionViolation: return "PreconditionViolation";
        case ErrorKind::HypothesisViolation: return "HypothesisViolation";
        case ErrorKind::TheoremViolation: return "TheoremViolation";
        case ErrorKind::GuaranteeLapsed: return "GuaranteeLapsed";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string & message, std::string witness) :
    std::runtime_error(std::string(to_string(kind)) + ": " + message),
    _kind(kind),
    _witness(std::move(witness))
{
}

}
