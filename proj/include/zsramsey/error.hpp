#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace zsramsey {

enum class ErrorKind {
    InfeasibleParameters,
    InsufficientBlueprint,
    NotPrime,
    ModulusMismatch,
    Unreachable,
    HostTooSmall,
    PoolExhausted,
    PreconditionViolation,
    HypothesisViolation,
    TheoremViolation,
    // A proof-level assertion failed on an input that does not satisfy the
    // hypotheses, so nothing was guaranteed in the first place.
    GuaranteeLapsed,
    TooLarge,
    ParseError,
};

auto to_string(ErrorKind kind) -> std::string_view;

/// Typed domain error. `witness` carries a serialized description of the
/// offending sets or values when one is available.
class Error : public std::runtime_error
{
public:
    Error(ErrorKind kind, const std::string & message, std::string witness = {});

    auto kind() const noexcept -> ErrorKind { return _kind; }
    auto witness() const noexcept -> const std::string & { return _witness; }

private:
    ErrorKind _kind;
    std::string _witness;
};

}
