#include "aec/error.hpp"

namespace aec {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::DegreeViolation: return "DegreeViolation";
        case ErrorKind::DuplicateEdge: return "DuplicateEdge";
        case ErrorKind::SelfLoop: return "SelfLoop";
        case ErrorKind::UnknownEdge: return "UnknownEdge";
        case ErrorKind::UnknownVertex: return "UnknownVertex";
        case ErrorKind::Disconnected: return "Disconnected";
        case ErrorKind::PreconditionViolated: return "PreconditionViolated";
        case ErrorKind::NotACandidate: return "NotACandidate";
        case ErrorKind::AlreadyColored: return "AlreadyColored";
        case ErrorKind::InvalidPair: return "InvalidPair";
        case ErrorKind::OnCycle: return "OnCycle";
        case ErrorKind::NotConfigurationA: return "NotConfigurationA";
        case ErrorKind::CycleCreated: return "CycleCreated";
        case ErrorKind::InternalError: return "InternalError";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::InfeasibleSpec: return "InfeasibleSpec";
        case ErrorKind::Parse: return "Parse";
        case ErrorKind::Io: return "Io";
    }
    return "Unknown";
}

}  // namespace aec
