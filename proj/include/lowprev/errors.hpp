#pragma once

#include <stdexcept>
#include <string>

namespace lowprev {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An operation would materialize more tuples than the configured cap allows.
struct CapExceeded : Error {
    using Error::Error;
};

struct UnknownLabel : Error {
    using Error::Error;
};

struct BadPermutation : Error {
    using Error::Error;
};

struct MalformedProgram : Error {
    using Error::Error;
};

/// The assessment admits no dominating mass function at all.
struct SureLoss : Error {
    using Error::Error;
};

struct EmptySet : Error {
    using Error::Error;
};

struct DegreeTooLow : Error {
    using Error::Error;
};

struct DegreeUnavailable : Error {
    using Error::Error;
};

struct NotExtendable : Error {
    using Error::Error;
};

struct NoExchangeableDominator : Error {
    using Error::Error;
};

/// Input validation failure; `key` names the offending entry when known.
struct ParseError : Error {
    std::string key;
    explicit ParseError(const std::string& message, std::string offending_key = {})
        : Error(message), key(std::move(offending_key)) {}
};

}  // namespace lowprev
