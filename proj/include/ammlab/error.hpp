#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ammlab {

enum class ErrorCode {
    Domain,               // argument outside the operation's domain
    Depleted,             // trade would drain a reserve beyond what it holds
    Unsupported,          // operation not defined for this curve / archetype
    InsufficientBalance,  // ledger or LP share balance too small
    MissingOracle,        // price-adopting pool has no adopted price yet
    UnknownToken,
    NotProportional,      // LP deposit not aligned with current reserves
    MarketClosed,         // prediction market already resolved
    Solver,               // root finder failed to converge
    Parse,                // malformed input file
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Raised by the numeric solvers; carries the residual at the last iterate.
class SolverError : public Error {
public:
    SolverError(const std::string& what, double residual)
        : Error(ErrorCode::Solver, what), residual_(residual) {}

    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

inline void require(bool condition, ErrorCode code, const std::string& what) {
    if (!condition) fail(code, what);
}

}  // namespace ammlab
