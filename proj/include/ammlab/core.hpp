#pragma once

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ammlab/error.hpp"

namespace ammlab {

/// Default relative tolerance for floating-point equalities.
inline constexpr double kRelTol = 1e-9;

/// |a - b| <= tol * max(|a|, |b|), with an absolute floor for values near zero.
inline bool approx_equal(double a, double b, double rel_tol = kRelTol, double abs_floor = 1e-300) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return std::abs(a - b) <= std::max(rel_tol * scale, abs_floor);
}

inline double relative_difference(double a, double b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

/// Non-negative token quantity. Subtraction that would go negative throws.
class Amount {
public:
    constexpr Amount() = default;
    explicit Amount(double value) : value_(value) {
        require(std::isfinite(value) && value >= 0.0, ErrorCode::Domain,
                "amount must be finite and non-negative, got " + std::to_string(value));
    }

    double value() const noexcept { return value_; }
    bool is_zero() const noexcept { return value_ == 0.0; }

    friend Amount operator+(Amount a, Amount b) { return Amount(a.value_ + b.value_); }
    friend Amount operator-(Amount a, Amount b) {
        require(b.value_ <= a.value_, ErrorCode::InsufficientBalance,
                "amount subtraction would go negative: " + std::to_string(a.value_) + " - " +
                    std::to_string(b.value_));
        return Amount(a.value_ - b.value_);
    }
    Amount& operator+=(Amount other) { return *this = *this + other; }
    Amount& operator-=(Amount other) { return *this = *this - other; }

    friend auto operator<=>(Amount, Amount) = default;

private:
    double value_ = 0.0;
};

template <typename Tag>
class StrongId {
public:
    StrongId() = default;
    explicit StrongId(std::string value) : value_(std::move(value)) {}
    StrongId(const char* value) : value_(value) {}

    const std::string& str() const noexcept { return value_; }
    bool empty() const noexcept { return value_.empty(); }

    friend auto operator<=>(const StrongId&, const StrongId&) = default;

private:
    std::string value_;
};

struct TokenTag {};
struct AccountTag {};

using TokenId = StrongId<TokenTag>;
using AccountId = StrongId<AccountTag>;

/// Account book for one token. Copies are cheap snapshots; operations return new ledgers.
class Ledger {
public:
    Ledger() = default;
    explicit Ledger(TokenId token) : token_(std::move(token)) {}

    const TokenId& token() const noexcept { return token_; }
    Amount total_supply() const noexcept { return total_supply_; }
    Amount balance(const AccountId& account) const;
    const std::map<AccountId, Amount>& balances() const noexcept { return balances_; }

    /// Sum of balances, recomputed from scratch.
    double balances_sum() const;

    friend bool operator==(const Ledger&, const Ledger&) = default;

private:
    friend Ledger ledger_transfer(const Ledger&, const AccountId&, const AccountId&, Amount);
    friend Ledger ledger_mint(const Ledger&, const AccountId&, Amount);
    friend Ledger ledger_burn(const Ledger&, const AccountId&, Amount);

    void set_balance(const AccountId& account, Amount amount);

    TokenId token_;
    std::map<AccountId, Amount> balances_;
    Amount total_supply_;
};

Ledger ledger_transfer(const Ledger& ledger, const AccountId& from, const AccountId& to, Amount amount);
Ledger ledger_mint(const Ledger& ledger, const AccountId& to, Amount amount);
Ledger ledger_burn(const Ledger& ledger, const AccountId& from, Amount amount);

/// All token ledgers known to a simulation, keyed by token.
class LedgerBook {
public:
    bool contains(const TokenId& token) const { return ledgers_.count(token) != 0; }
    const Ledger& at(const TokenId& token) const;
    Amount balance(const TokenId& token, const AccountId& account) const;

    /// Adds an empty ledger for `token` if none exists.
    void register_token(const TokenId& token);
    void put(Ledger ledger);

    void transfer(const TokenId& token, const AccountId& from, const AccountId& to, Amount amount);
    void mint(const TokenId& token, const AccountId& to, Amount amount);
    void burn(const TokenId& token, const AccountId& from, Amount amount);

    const std::map<TokenId, Ledger>& ledgers() const noexcept { return ledgers_; }

    friend bool operator==(const LedgerBook&, const LedgerBook&) = default;

private:
    Ledger& mutable_at(const TokenId& token);

    std::map<TokenId, Ledger> ledgers_;
};

struct FeeParams {
    double trade_fee = 0.0;    // fraction of the input amount, in [0, 1)
    double surcharge_k = 0.0;  // imbalance surcharge magnitude, in [0, 1]

    void validate() const;

    friend bool operator==(const FeeParams&, const FeeParams&) = default;
};

}  // namespace ammlab
