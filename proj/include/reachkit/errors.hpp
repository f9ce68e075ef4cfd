#pragma once

#include <stdexcept>
#include <string>

namespace reachkit {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: bad JSON, out-of-range letters or states.
class InputError : public Error {
public:
    using Error::Error;
};

/// An operation was called outside its precondition (e.g. a non-total DFA
/// passed to a synchronisation check).
class ContractError : public Error {
public:
    using Error::Error;
};

/// An exponential procedure refused to run because the instance exceeds the
/// configured state limit.
class ResourceError : public Error {
public:
    ResourceError(const std::string& what, std::size_t limit)
        : Error(what + " (limit " + std::to_string(limit) + " states)"), limit_(limit) {}

    std::size_t limit() const noexcept { return limit_; }

private:
    std::size_t limit_;
};

/// A generated instance failed to re-certify against the oracles.
class CertificationError : public Error {
public:
    CertificationError(const std::string& claim, const std::string& detail)
        : Error("certification failed: " + claim + ": " + detail), claim_(claim) {}

    const std::string& claim() const noexcept { return claim_; }

private:
    std::string claim_;
};

}  // namespace reachkit
