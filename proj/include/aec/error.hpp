#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace aec {

enum class ErrorKind {
    DegreeViolation,
    DuplicateEdge,
    SelfLoop,
    UnknownEdge,
    UnknownVertex,
    Disconnected,
    PreconditionViolated,
    NotACandidate,
    AlreadyColored,
    InvalidPair,
    OnCycle,
    NotConfigurationA,
    CycleCreated,
    InternalError,
    TooLarge,
    InfeasibleSpec,
    Parse,
    Io,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace aec
