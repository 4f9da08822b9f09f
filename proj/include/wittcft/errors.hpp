#pragma once

#include <stdexcept>
#include <string>

namespace wittcft {

enum class ErrorCode {
    SpecMismatch,
    NotAUnit,
    NotCoprime,
    NotSplit,
    Ramified,
    EqualPrimes,
    NotNormalized,
    InvalidArgument,
    Parse,
};

// Every failure raised by the library carries one of the codes above so that
// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

inline const char* error_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::SpecMismatch: return "SpecMismatch";
    case ErrorCode::NotAUnit: return "NotAUnit";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::NotSplit: return "NotSplit";
    case ErrorCode::Ramified: return "Ramified";
    case ErrorCode::EqualPrimes: return "EqualPrimes";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Parse: return "ParseError";
    }
    return "Error";
}

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

} // namespace wittcft
