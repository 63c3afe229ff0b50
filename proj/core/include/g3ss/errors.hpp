#pragma once

#include <stdexcept>
#include <string>

namespace g3ss {

enum class ErrorCode {
    NotPrime,
    EvenCharacteristic,
    DegreeOutOfRange,
    DivisionByZero,
    ZeroPolynomial,
    BadDegree,
    NotSquarefree,
    BadReduction,
    BudgetExceeded,
    NonIntegralCoefficient,
    WeilViolation,
    PreconditionViolated,
    CtxMismatch,
    Overflow,
    Internal,
};

inline const char* to_string(ErrorCode c) {
    switch (c) {
        case ErrorCode::NotPrime: return "NotPrime";
        case ErrorCode::EvenCharacteristic: return "EvenCharacteristic";
        case ErrorCode::DegreeOutOfRange: return "DegreeOutOfRange";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorCode::BadDegree: return "BadDegree";
        case ErrorCode::NotSquarefree: return "NotSquarefree";
        case ErrorCode::BadReduction: return "BadReduction";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::NonIntegralCoefficient: return "NonIntegralCoefficient";
        case ErrorCode::WeilViolation: return "WeilViolation";
        case ErrorCode::PreconditionViolated: return "PreconditionViolated";
        case ErrorCode::CtxMismatch: return "CtxMismatch";
        case ErrorCode::Overflow: return "Overflow";
        case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& msg)
        : std::runtime_error(std::string(to_string(code)) + ": " + msg), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& msg) { throw Error(code, msg); }

}  // namespace g3ss
