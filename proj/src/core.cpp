#include "ammlab/core.hpp"

namespace ammlab {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::Domain: return "domain";
        case ErrorCode::Depleted: return "depleted";
        case ErrorCode::Unsupported: return "unsupported";
        case ErrorCode::InsufficientBalance: return "insufficient-balance";
        case ErrorCode::MissingOracle: return "missing-oracle";
        case ErrorCode::UnknownToken: return "unknown-token";
        case ErrorCode::NotProportional: return "not-proportional";
        case ErrorCode::MarketClosed: return "market-closed";
        case ErrorCode::Solver: return "solver";
        case ErrorCode::Parse: return "parse";
    }
    return "unknown";
}

Amount Ledger::balance(const AccountId& account) const {
    auto it = balances_.find(account);
    return it == balances_.end() ? Amount{} : it->second;
}

double Ledger::balances_sum() const {
    double sum = 0.0;
    for (const auto& [account, amount] : balances_) sum += amount.value();
    return sum;
}

void Ledger::set_balance(const AccountId& account, Amount amount) {
    if (amount.is_zero()) {
        balances_.erase(account);
    } else {
        balances_[account] = amount;
    }
}

Ledger ledger_transfer(const Ledger& ledger, const AccountId& from, const AccountId& to, Amount amount) {
    if (amount.is_zero() || from == to) {
        require(ledger.balance(from) >= amount, ErrorCode::InsufficientBalance,
                "insufficient " + ledger.token().str() + " balance for " + from.str());
        return ledger;
    }
    const Amount have = ledger.balance(from);
    require(have >= amount, ErrorCode::InsufficientBalance,
            "insufficient " + ledger.token().str() + " balance for " + from.str() + ": has " +
                std::to_string(have.value()) + ", needs " + std::to_string(amount.value()));
    Ledger next = ledger;
    next.set_balance(from, have - amount);
    next.set_balance(to, next.balance(to) + amount);
    return next;
}

Ledger ledger_mint(const Ledger& ledger, const AccountId& to, Amount amount) {
    if (amount.is_zero()) return ledger;
    Ledger next = ledger;
    next.set_balance(to, next.balance(to) + amount);
    next.total_supply_ = Amount(next.balances_sum());
    return next;
}

Ledger ledger_burn(const Ledger& ledger, const AccountId& from, Amount amount) {
    const Amount have = ledger.balance(from);
    require(have >= amount, ErrorCode::InsufficientBalance,
            "cannot burn " + std::to_string(amount.value()) + " " + ledger.token().str() + " from " +
                from.str() + " holding " + std::to_string(have.value()));
    if (amount.is_zero()) return ledger;
    Ledger next = ledger;
    next.set_balance(from, have - amount);
    // A running total drifts from the balances once burns cancel most of it, so restate it.
    next.total_supply_ = Amount(next.balances_sum());
    return next;
}

const Ledger& LedgerBook::at(const TokenId& token) const {
    auto it = ledgers_.find(token);
    if (it == ledgers_.end()) fail(ErrorCode::UnknownToken, "no ledger for token " + token.str());
    return it->second;
}

Ledger& LedgerBook::mutable_at(const TokenId& token) {
    auto it = ledgers_.find(token);
    if (it == ledgers_.end()) fail(ErrorCode::UnknownToken, "no ledger for token " + token.str());
    return it->second;
}

Amount LedgerBook::balance(const TokenId& token, const AccountId& account) const {
    return at(token).balance(account);
}

void LedgerBook::register_token(const TokenId& token) {
    if (!contains(token)) ledgers_.emplace(token, Ledger(token));
}

void LedgerBook::put(Ledger ledger) {
    TokenId token = ledger.token();
    ledgers_.insert_or_assign(std::move(token), std::move(ledger));
}

void LedgerBook::transfer(const TokenId& token, const AccountId& from, const AccountId& to, Amount amount) {
    Ledger& ledger = mutable_at(token);
    ledger = ledger_transfer(ledger, from, to, amount);
}

void LedgerBook::mint(const TokenId& token, const AccountId& to, Amount amount) {
    Ledger& ledger = mutable_at(token);
    ledger = ledger_mint(ledger, to, amount);
}

void LedgerBook::burn(const TokenId& token, const AccountId& from, Amount amount) {
    Ledger& ledger = mutable_at(token);
    ledger = ledger_burn(ledger, from, amount);
}

void FeeParams::validate() const {
    require(std::isfinite(trade_fee) && trade_fee >= 0.0 && trade_fee < 1.0, ErrorCode::Domain,
            "trade fee must lie in [0, 1)");
    require(std::isfinite(surcharge_k) && surcharge_k >= 0.0 && surcharge_k <= 1.0, ErrorCode::Domain,
            "surcharge k must lie in [0, 1]");
}

}  // namespace ammlab
