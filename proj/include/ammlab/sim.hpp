#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ammlab/engine.hpp"

namespace ammlab {

struct PricePoint {
    long long step = 0;
    double price = 0.0;
};

/// Reference prices by step; steps strictly increasing.
using PriceSeries = std::vector<PricePoint>;

/// CSV with header `step,price`.
PriceSeries parse_price_series(std::string_view text);
PriceSeries load_price_series(const std::string& path);
/// Price of the latest point at or before `step`.
std::optional<double> price_at(const PriceSeries& series, long long step);

/// The pair a pool is quoted on: spot(base -> quote) is the price of `base` in `quote`.
/// Token 0 in token 1 for LP-based conservation and price-adopting pools; the first
/// outcome in collateral for LMSR; the issued token in the reserve token for
/// supply-sovereign pools.
struct QuotedPair {
    std::size_t base = 0;
    std::size_t quote = 1;
};
QuotedPair quoted_pair(const PoolState& pool);
double quoted_spot(const PoolState& pool);

struct ArbitrageOutcome {
    PoolState pool;
    LedgerBook ledgers;
    std::optional<TradeReceipt> receipt;  // empty when no trade is profitable
};

/// Trades the quoted pair toward `reference_price` (price of base in quote) by maximising
/// the arbitrageur's profit, valued at the reference, with a golden-section search.
ArbitrageOutcome arbitrage_step(const PoolState& pool, double reference_price, const AccountId& arbitrageur,
                                const LedgerBook& ledgers);

struct ScenarioEvent {
    long long step = 0;
    std::string verb;  // trade | deposit | withdraw | oracle | arb | resolve
    std::vector<std::string> args;
    std::size_t line = 0;
};

struct Endowment {
    AccountId account;
    TokenId token;
    double amount = 0.0;
};

struct Scenario {
    std::string pool;  // built-in name or path
    AccountId creator{"lp"};
    std::vector<Endowment> endowments;
    std::uint64_t seed = 0;
    std::vector<ScenarioEvent> events;
};

/// One event per line: `<step> <verb> <args...>`. Header directives `pool <name|path>`,
/// `creator <account>`, `fund <account> <token> <amount>` and `seed <n>` configure the
/// run. `#` starts a comment. A trade amount written `~X` is drawn uniformly from
/// [X/2, 3X/2] with the scenario seed.
Scenario parse_scenario(std::string_view text);
/// Relative pool paths resolve against the scenario file's directory.
Scenario load_scenario(const std::string& path);

struct MetricRecord {
    long long step = 0;
    std::string event;
    double spot = 0.0;
    double reference = 0.0;
    double tracking_error = 0.0;
    double invariant = 0.0;
    double lp_value = 0.0;
    double divergence_loss = 0.0;
    double fees_cum = 0.0;
};

struct ScenarioFailure {
    std::size_t event_index = 0;
    std::string message;
};

struct ScenarioRun {
    std::vector<MetricRecord> metrics;
    PoolState pool;
    LedgerBook ledgers;
    std::optional<ScenarioFailure> failure;
};

ScenarioRun run_scenario(const Scenario& scenario, const PriceSeries& prices, const LedgerBook& ledgers = {});

/// Header `step,event,spot,reference,tracking_error,invariant,lp_value,divergence_loss,fees_cum`.
std::string metrics_csv(const std::vector<MetricRecord>& metrics);

}  // namespace ammlab
