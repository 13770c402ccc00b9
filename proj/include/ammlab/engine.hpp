#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ammlab/core.hpp"
#include "ammlab/curves.hpp"

namespace ammlab {

enum class Archetype {
    PriceDiscoveringLpBased,
    PriceAdoptingLpBased,
    PriceDiscoveringSupplySovereign,
};

std::string_view archetype_key(Archetype a);
std::optional<Archetype> archetype_from_key(std::string_view key);

/// Static description of a pool, as read from a pool file or a built-in.
///
/// Reserve layout by archetype:
///   LP-based conservation curves: one deposit amount per token.
///   LP-based LMSR: tokens are {collateral, outcome...}; `reserves` holds the initial
///     outstanding share vector q (one entry per outcome).
///   Supply-sovereign: tokens are {reserve token, issued token}; `reserves` is empty.
struct PoolConfig {
    std::string name = "pool";
    Archetype archetype = Archetype::PriceDiscoveringLpBased;
    CurveSpec curve;
    std::vector<TokenId> tokens;
    std::vector<double> reserves;
    FeeParams fee;

    void validate() const;
};

/// Funding the creator must supply: deposits for LP pools, C(q0) collateral for LMSR,
/// nothing for supply-sovereign pools.
std::vector<double> default_initial_deposit(const PoolConfig& config);

struct PoolState {
    std::string name;
    AccountId account;  // the pool's own ledger account
    Archetype archetype = Archetype::PriceDiscoveringLpBased;
    std::vector<TokenId> tokens;
    CurveSpec curve;
    /// LP-based: one reserve per token. LMSR: {collateral, q...}. Supply-sovereign: {r_b}.
    std::vector<double> reserves;
    FeeParams fee;
    double lp_share_supply = 0.0;
    std::map<AccountId, double> lp_shares;
    double circulating_supply = 0.0;
    std::optional<double> oracle_price;  // price of tokens[0] in units of tokens[1]
    std::vector<double> accumulated_fees;
    bool closed = false;  // prediction market resolved

    bool is_lmsr() const { return std::holds_alternative<Lmsr>(curve); }
    std::size_t token_index(const TokenId& token) const;
    /// Reserves in the layout the curve functions expect.
    std::vector<double> curve_reserves() const;
    /// Maps a pool token index to the curve's index space.
    std::size_t curve_index(std::size_t token) const;
};

/// FNV-1a over every numeric field of the state.
std::uint64_t state_digest(const PoolState& pool);

enum class OrderKind { ExactIn, ExactOut };

struct TradeOrder {
    AccountId trader;
    TokenId token_in;
    TokenId token_out;
    double amount = 0.0;
    OrderKind kind = OrderKind::ExactIn;
};

struct Quote {
    std::size_t token_in = 0;
    std::size_t token_out = 0;
    double amount_in = 0.0;   // gross, including fee when charged on input
    double amount_out = 0.0;  // net, after fee when charged on output
    double fee_paid = 0.0;
    double surcharge_component = 0.0;  // output at the flat adopted price minus actual output
    double spot_before = 0.0;
    double spot_after = 0.0;
    double mean_price = 0.0;  // amount_out / amount_in
};

struct LedgerDelta {
    TokenId token;
    AccountId account;
    double delta = 0.0;
};

struct TradeReceipt {
    Quote quote;
    std::uint64_t pool_digest = 0;
    std::vector<LedgerDelta> deltas;
};

struct TradeResult {
    PoolState pool;
    Quote quote;
};

struct PoolCreation {
    PoolState pool;
    LedgerBook ledgers;
    double lp_shares = 0.0;
};

struct SwapOutcome {
    PoolState pool;
    TradeReceipt receipt;
    LedgerBook ledgers;
};

struct LiquidityOutcome {
    PoolState pool;
    LedgerBook ledgers;
    double shares = 0.0;              // minted (deposit) or burned (withdraw)
    std::vector<double> amounts;      // paid in (deposit) or out (withdraw), per token
};

struct CurveTradeOutcome {
    PoolState pool;
    LedgerBook ledgers;
    double amount = 0.0;  // tokens minted on buy, reserve paid out on sell
};

PoolCreation create_pool(const PoolConfig& config, const std::vector<double>& initial_deposit,
                         const AccountId& creator, const LedgerBook& ledgers);

/// Mints `default_initial_deposit(config)` to `creator` and creates the pool from it.
PoolCreation instantiate_pool(const PoolConfig& config, const AccountId& creator = AccountId("creator"),
                              LedgerBook ledgers = {});

/// Marginal units of `out` per unit of `in`, before fees.
double pool_spot(const PoolState& pool, std::size_t token_in, std::size_t token_out);
/// Conservation value of the current state (Unsupported for price adoption).
double pool_invariant(const PoolState& pool);

/// Pure state transition for a trade; no ledgers involved.
TradeResult apply_trade(const PoolState& pool, std::size_t token_in, std::size_t token_out, double amount,
                        OrderKind kind = OrderKind::ExactIn);

Quote quote(const PoolState& pool, const TradeOrder& order);

SwapOutcome execute_swap(const PoolState& pool, const TradeOrder& order, const LedgerBook& ledgers);

LiquidityOutcome deposit_liquidity(const PoolState& pool, const AccountId& provider,
                                   const std::vector<double>& amounts, const LedgerBook& ledgers);

LiquidityOutcome withdraw_liquidity(const PoolState& pool, const AccountId& provider, double shares,
                                    const LedgerBook& ledgers);

CurveTradeOutcome curve_buy(const PoolState& pool, const AccountId& buyer, double reserve_in,
                            const LedgerBook& ledgers);
CurveTradeOutcome curve_sell(const PoolState& pool, const AccountId& seller, double tokens_in,
                             const LedgerBook& ledgers);

PoolState set_oracle_price(const PoolState& pool, double price);

struct Resolution {
    PoolState pool;
    LedgerBook ledgers;
    double paid_out = 0.0;
};

Resolution resolve_prediction(const PoolState& pool, std::size_t winning_outcome, const LedgerBook& ledgers);

}  // namespace ammlab
