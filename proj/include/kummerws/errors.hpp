#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace kummerws {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact arithmetic only: any operation that would wrap raises instead.
struct OverflowError : Error {
    using Error::Error;
};

struct RejectedParams : Error {
    enum class Reason {
        non_coprime,
        r_too_small,
        m_too_small,
        lambda_too_small,
        characteristic_invalid,
        characteristic_divides_m,
    };

    RejectedParams(std::string message, std::vector<Reason> violated)
        : Error(std::move(message)), reasons(std::move(violated)) {}

    std::vector<Reason> reasons;
};

inline const char* reason_string(RejectedParams::Reason reason) {
    switch (reason) {
        case RejectedParams::Reason::non_coprime: return "parameters not coprime";
        case RejectedParams::Reason::r_too_small: return "r too small";
        case RejectedParams::Reason::m_too_small: return "m too small";
        case RejectedParams::Reason::lambda_too_small: return "lambda too small";
        case RejectedParams::Reason::characteristic_invalid: return "characteristic invalid";
        case RejectedParams::Reason::characteristic_divides_m: return "characteristic divides m";
    }
    return "unknown";
}

struct InvalidTupleLength : Error {
    using Error::Error;
};

struct LengthMismatch : Error {
    using Error::Error;
};

struct NotAGammaElement : Error {
    using Error::Error;
};

struct NotAMember : Error {
    using Error::Error;
};

struct UnsupportedSupport : Error {
    using Error::Error;
};

}  // namespace kummerws
