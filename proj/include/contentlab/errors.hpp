#pragma once

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace contentlab {

enum class ErrorKind {
    GroupMismatch,
    MalformedDescriptor,
    RingMismatch,
    WrongRingKind,
    UnsupportedRing,
    UnsupportedOp,
    NotPrimeModulus,
    NotPrimeInput,
    NotPrimaryInput,
    PrecondViolated,
    MalformedTower,
    SyntaxError,
    ElaborationError,
    ConfigError,
    UnknownDemo,
    Internal,
};

const char *error_kind_name(ErrorKind k);

// All library failures are reported through this type. `payload` carries a
// structured witness when one exists (e.g. NotPrimeInput keeps the factor
// pair that refutes primality so callers can consume it).
class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string &message)
        : std::runtime_error(message), kind_(kind) {}
    Error(ErrorKind kind, const std::string &message, nlohmann::json payload)
        : std::runtime_error(message), kind_(kind), payload_(std::move(payload)) {}

    ErrorKind kind() const { return kind_; }
    const nlohmann::json &payload() const { return payload_; }

  private:
    ErrorKind kind_;
    nlohmann::json payload_;
};

} // namespace contentlab
