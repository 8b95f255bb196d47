#include "contentlab/errors.hpp"

namespace contentlab {

const char *error_kind_name(ErrorKind k) {
    switch (k) {
    case ErrorKind::GroupMismatch: return "GroupMismatch";
    case ErrorKind::MalformedDescriptor: return "MalformedDescriptor";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::WrongRingKind: return "WrongRingKind";
    case ErrorKind::UnsupportedRing: return "UnsupportedRing";
    case ErrorKind::UnsupportedOp: return "UnsupportedOp";
    case ErrorKind::NotPrimeModulus: return "NotPrimeModulus";
    case ErrorKind::NotPrimeInput: return "NotPrimeInput";
    case ErrorKind::NotPrimaryInput: return "NotPrimaryInput";
    case ErrorKind::PrecondViolated: return "PrecondViolated";
    case ErrorKind::MalformedTower: return "MalformedTower";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::ElaborationError: return "ElaborationError";
    case ErrorKind::ConfigError: return "ConfigError";
    case ErrorKind::UnknownDemo: return "UnknownDemo";
    case ErrorKind::Internal: return "Internal";
    }
    return "Unknown";
}

} // namespace contentlab
