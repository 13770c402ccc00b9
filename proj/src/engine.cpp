#include "ammlab/engine.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstring>
#include <limits>
#include <numeric>

#include "ammlab/error.hpp"

namespace ammlab {

namespace {

constexpr std::array<std::string_view, 3> kArchetypeKeys = {
    "price-discovering-lp-based",
    "price-adopting-lp-based",
    "price-discovering-supply-sovereign",
};

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

bool is_supply_sovereign(const PoolState& pool) {
    return pool.archetype == Archetype::PriceDiscoveringSupplySovereign;
}

void check_token_pair(const PoolState& pool, std::size_t in, std::size_t out) {
    require(in < pool.tokens.size() && out < pool.tokens.size(), ErrorCode::UnknownToken,
            "token index out of range for pool " + pool.name);
    require(in != out, ErrorCode::Domain, "token_in and token_out must differ");
}

void check_finite_amount(double v, const char* what) {
    require(std::isfinite(v) && v >= 0.0, ErrorCode::Domain, std::string(what) + " must be finite and non-negative");
}

std::optional<double> adopted_price(const PoolState& pool) {
    if (pool.archetype != Archetype::PriceAdoptingLpBased) return std::nullopt;
    if (!pool.oracle_price) fail(ErrorCode::MissingOracle, "pool " + pool.name + " has no oracle price set");
    return pool.oracle_price;
}

/// Net/gross conversions for a fee charged on one leg of a trade.
double net_of_fee(double gross, double fee) { return gross * (1.0 - fee); }
double gross_of_fee(double net, double fee) { return fee == 0.0 ? net : net / (1.0 - fee); }

std::vector<double> curve_parameters(const CurveSpec& spec) {
    return std::visit(
        [](const auto& c) -> std::vector<double> {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, GeometricMean>) return c.weights;
            if constexpr (std::is_same_v<T, ConstantProductSum>) return {c.chi};
            if constexpr (std::is_same_v<T, ConstantPowerSum>) return {c.t};
            if constexpr (std::is_same_v<T, Lmsr>) return {c.b};
            if constexpr (std::is_same_v<T, PriceAdoption>) {
                std::vector<double> v{c.k};
                v.insert(v.end(), c.target_reserves.begin(), c.target_reserves.end());
                return v;
            }
            if constexpr (std::is_same_v<T, Exponential>) return {c.kappa, c.c};
            return {};
        },
        spec);
}

class Fnv1a {
public:
    void bytes(const void* data, std::size_t n) {
        const auto* p = static_cast<const unsigned char*>(data);
        for (std::size_t i = 0; i < n; ++i) {
            hash_ ^= p[i];
            hash_ *= 1099511628211ULL;
        }
    }
    void number(double v) { bytes(&v, sizeof v); }
    void text(const std::string& s) {
        bytes(s.data(), s.size());
        bytes("\0", 1);
    }
    std::uint64_t value() const { return hash_; }

private:
    std::uint64_t hash_ = 14695981039346656037ULL;
};

void scale_targets(PoolState& pool, double factor) {
    if (auto* pa = std::get_if<PriceAdoption>(&pool.curve)) {
        for (double& t : pa->target_reserves) t *= factor;
    }
}

void register_tokens(LedgerBook& book, const std::vector<TokenId>& tokens) {
    for (const auto& t : tokens) book.register_token(t);
}

}  // namespace

std::string_view archetype_key(Archetype a) { return kArchetypeKeys[static_cast<std::size_t>(a)]; }

std::optional<Archetype> archetype_from_key(std::string_view key) {
    for (std::size_t i = 0; i < kArchetypeKeys.size(); ++i) {
        if (kArchetypeKeys[i] == key) return static_cast<Archetype>(i);
    }
    return std::nullopt;
}

void PoolConfig::validate() const {
    fee.validate();
    const CurveKind kind = curve_kind(curve);
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        require(!tokens[i].empty(), ErrorCode::Domain, "token names must be non-empty");
        for (std::size_t j = 0; j < i; ++j) {
            require(tokens[i] != tokens[j], ErrorCode::Domain, "duplicate token " + tokens[i].str());
        }
    }
    switch (archetype) {
        case Archetype::PriceDiscoveringLpBased:
            if (kind == CurveKind::Lmsr) {
                require(tokens.size() >= 3, ErrorCode::Domain, "LMSR pool needs a collateral token and two outcomes");
                require(reserves.size() + 1 == tokens.size(), ErrorCode::Domain,
                        "LMSR reserves list one share quantity per outcome token");
                for (double q : reserves) check_finite_amount(q, "share quantity");
                validate_curve(curve, reserves.size());
                return;
            }
            require(is_conservation_curve(kind), ErrorCode::Domain,
                    "price-discovering LP-based pools need a conservation-function curve");
            break;
        case Archetype::PriceAdoptingLpBased:
            require(kind == CurveKind::PriceAdoption, ErrorCode::Domain,
                    "price-adopting pools need the price-adoption curve");
            break;
        case Archetype::PriceDiscoveringSupplySovereign:
            require(kind == CurveKind::Exponential, ErrorCode::Domain,
                    "supply-sovereign pools need the exponential curve");
            require(tokens.size() == 2, ErrorCode::Domain, "supply-sovereign pools take {reserve token, issued token}");
            require(reserves.empty(), ErrorCode::Domain, "supply-sovereign pools start empty; omit reserves");
            validate_curve(curve, 2);
            return;
    }
    require(reserves.size() == tokens.size(), ErrorCode::Domain, "one reserve per token is required");
    for (double r : reserves) {
        require(std::isfinite(r) && r > 0.0, ErrorCode::Domain, "initial reserves must be strictly positive");
    }
    validate_curve(curve, tokens.size());
}

std::vector<double> default_initial_deposit(const PoolConfig& config) {
    if (config.archetype == Archetype::PriceDiscoveringSupplySovereign) return {};
    if (const auto* l = std::get_if<Lmsr>(&config.curve)) return {lmsr_cost(l->b, config.reserves)};
    return config.reserves;
}

std::size_t PoolState::token_index(const TokenId& token) const {
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (tokens[i] == token) return i;
    }
    fail(ErrorCode::UnknownToken, "token " + token.str() + " is not traded by pool " + name);
}

std::vector<double> PoolState::curve_reserves() const {
    if (is_lmsr()) return {reserves.begin() + 1, reserves.end()};
    if (archetype == Archetype::PriceDiscoveringSupplySovereign) return {reserves[0], circulating_supply};
    return reserves;
}

std::size_t PoolState::curve_index(std::size_t token) const {
    if (!is_lmsr()) return token;
    return token == 0 ? reserves.size() - 1 : token - 1;
}

std::uint64_t state_digest(const PoolState& pool) {
    Fnv1a h;
    h.text(pool.name);
    h.number(static_cast<double>(pool.archetype));
    h.number(static_cast<double>(pool.curve.index()));
    for (double p : curve_parameters(pool.curve)) h.number(p);
    for (const auto& t : pool.tokens) h.text(t.str());
    for (double r : pool.reserves) h.number(r);
    h.number(pool.fee.trade_fee);
    h.number(pool.fee.surcharge_k);
    h.number(pool.lp_share_supply);
    for (const auto& [account, shares] : pool.lp_shares) {
        h.text(account.str());
        h.number(shares);
    }
    h.number(pool.circulating_supply);
    h.number(pool.oracle_price ? 1.0 : 0.0);
    h.number(pool.oracle_price.value_or(0.0));
    for (double f : pool.accumulated_fees) h.number(f);
    h.number(pool.closed ? 1.0 : 0.0);
    return h.value();
}

PoolCreation create_pool(const PoolConfig& config, const std::vector<double>& initial_deposit,
                         const AccountId& creator, const LedgerBook& ledgers) {
    config.validate();
    PoolCreation out{{}, ledgers, 0.0};
    PoolState& pool = out.pool;
    pool.name = config.name;
    pool.account = AccountId("pool:" + config.name);
    pool.archetype = config.archetype;
    pool.tokens = config.tokens;
    pool.curve = config.curve;
    pool.fee = config.fee;
    pool.accumulated_fees.assign(config.tokens.size(), 0.0);
    register_tokens(out.ledgers, pool.tokens);

    if (config.archetype == Archetype::PriceDiscoveringSupplySovereign) {
        for (double d : initial_deposit) {
            require(d == 0.0, ErrorCode::Domain, "supply-sovereign pools start with zero tokens minted");
        }
        pool.reserves = {0.0};
        pool.circulating_supply = 0.0;
        return out;
    }

    if (const auto* l = std::get_if<Lmsr>(&config.curve)) {
        require(initial_deposit.size() == 1, ErrorCode::Domain, "LMSR pools are funded with collateral only");
        const double funding = initial_deposit[0];
        const double needed = lmsr_cost(l->b, config.reserves);
        require(std::isfinite(funding) && funding >= needed * (1.0 - 1e-12), ErrorCode::Domain,
                "LMSR funding must cover the initial cost " + std::to_string(needed));
        out.ledgers.transfer(pool.tokens[0], creator, pool.account, Amount(funding));
        for (std::size_t i = 0; i < config.reserves.size(); ++i) {
            out.ledgers.mint(pool.tokens[i + 1], creator, Amount(config.reserves[i]));
        }
        pool.reserves = {funding};
        pool.reserves.insert(pool.reserves.end(), config.reserves.begin(), config.reserves.end());
        out.lp_shares = funding;
    } else {
        require(initial_deposit.size() == pool.tokens.size(), ErrorCode::Domain,
                "initial deposit needs one amount per token");
        double log_sum = 0.0;
        for (std::size_t i = 0; i < initial_deposit.size(); ++i) {
            const double d = initial_deposit[i];
            require(std::isfinite(d) && d > 0.0, ErrorCode::Domain, "initial deposits must be strictly positive");
            out.ledgers.transfer(pool.tokens[i], creator, pool.account, Amount(d));
            log_sum += std::log(d);
        }
        pool.reserves = initial_deposit;
        out.lp_shares = std::exp(log_sum / static_cast<double>(initial_deposit.size()));
        if (auto* pa = std::get_if<PriceAdoption>(&pool.curve)) pool.fee.surcharge_k = pa->k;
    }
    pool.lp_share_supply = out.lp_shares;
    pool.lp_shares[creator] = out.lp_shares;
    return out;
}

PoolCreation instantiate_pool(const PoolConfig& config, const AccountId& creator, LedgerBook ledgers) {
    config.validate();
    const auto deposit = default_initial_deposit(config);
    register_tokens(ledgers, config.tokens);
    for (std::size_t i = 0; i < deposit.size(); ++i) ledgers.mint(config.tokens[i], creator, Amount(deposit[i]));
    return create_pool(config, deposit, creator, ledgers);
}

double pool_spot(const PoolState& pool, std::size_t in, std::size_t out) {
    check_token_pair(pool, in, out);
    const auto r = pool.curve_reserves();
    return spot_price(pool.curve, r, pool.curve_index(in), pool.curve_index(out), adopted_price(pool));
}

double pool_invariant(const PoolState& pool) {
    if (is_supply_sovereign(pool) && pool.reserves[0] == 0.0) return std::get<Exponential>(pool.curve).c;
    return invariant_value(pool.curve, pool.curve_reserves());
}

TradeResult apply_trade(const PoolState& pool, std::size_t in, std::size_t out, double amount, OrderKind kind) {
    require(!pool.closed, ErrorCode::MarketClosed, "pool " + pool.name + " is resolved");
    check_token_pair(pool, in, out);
    check_finite_amount(amount, "trade amount");

    TradeResult result{pool, {}};
    PoolState& next = result.pool;
    Quote& q = result.quote;
    q.token_in = in;
    q.token_out = out;
    q.spot_before = pool_spot(pool, in, out);

    const double fee = pool.fee.trade_fee;
    const auto adopted = adopted_price(pool);
    const auto cr = pool.curve_reserves();
    const std::size_t ci = pool.curve_index(in);
    const std::size_t co = pool.curve_index(out);
    const bool exact_in = kind == OrderKind::ExactIn;

    if (pool.is_lmsr()) {
        double& collateral = next.reserves[0];
        if (in == 0) {
            double net_in = 0.0;
            if (exact_in) {
                q.amount_in = amount;
                net_in = net_of_fee(amount, fee);
                q.amount_out = quote_exact_in(pool.curve, cr, ci, co, net_in);
            } else {
                q.amount_out = amount;
                net_in = quote_exact_out(pool.curve, cr, ci, co, amount);
                q.amount_in = gross_of_fee(net_in, fee);
            }
            q.fee_paid = q.amount_in - net_in;
            collateral += q.amount_in;
            next.reserves[out] += q.amount_out;
            next.accumulated_fees[0] += q.fee_paid;
        } else if (out == 0) {
            double gross_out = 0.0;
            if (exact_in) {
                q.amount_in = amount;
                gross_out = quote_exact_in(pool.curve, cr, ci, co, amount);
                q.amount_out = net_of_fee(gross_out, fee);
            } else {
                q.amount_out = amount;
                gross_out = gross_of_fee(amount, fee);
                q.amount_in = quote_exact_out(pool.curve, cr, ci, co, gross_out);
            }
            q.fee_paid = gross_out - q.amount_out;
            require(q.amount_out <= collateral, ErrorCode::Depleted, "payout exceeds pool collateral");
            collateral -= q.amount_out;
            next.reserves[in] -= q.amount_in;
            next.accumulated_fees[0] += q.fee_paid;
        } else {
            require(fee == 0.0, ErrorCode::Unsupported,
                    "outcome-to-outcome swaps are only priced without fees; route through collateral");
            q.amount_in = exact_in ? amount : quote_exact_out(pool.curve, cr, ci, co, amount);
            q.amount_out = exact_in ? quote_exact_in(pool.curve, cr, ci, co, amount) : amount;
            next.reserves[in] -= q.amount_in;
            next.reserves[out] += q.amount_out;
        }
        next.reserves[in] = std::max(0.0, next.reserves[in]);
    } else if (is_supply_sovereign(pool)) {
        double& bonded = next.reserves[0];
        double& supply = next.circulating_supply;
        if (in == 0) {
            double net_in = 0.0;
            if (exact_in) {
                q.amount_in = amount;
                net_in = net_of_fee(amount, fee);
                q.amount_out = quote_exact_in(pool.curve, cr, 0, 1, net_in);
            } else {
                q.amount_out = amount;
                net_in = quote_exact_out(pool.curve, cr, 0, 1, amount);
                q.amount_in = gross_of_fee(net_in, fee);
            }
            q.fee_paid = q.amount_in - net_in;
            bonded += net_in;
            supply += q.amount_out;
        } else {
            double gross_out = 0.0;
            if (exact_in) {
                q.amount_in = amount;
                require(amount <= supply, ErrorCode::Domain, "cannot sell more than the circulating supply");
                gross_out = amount == supply ? bonded : std::min(quote_exact_in(pool.curve, cr, 1, 0, amount), bonded);
                q.amount_out = net_of_fee(gross_out, fee);
            } else {
                q.amount_out = amount;
                gross_out = gross_of_fee(amount, fee);
                q.amount_in = quote_exact_out(pool.curve, cr, 1, 0, gross_out);
            }
            q.fee_paid = gross_out - q.amount_out;
            const bool drains = q.amount_in == supply;
            bonded = drains ? 0.0 : std::max(0.0, bonded - gross_out);
            supply = drains ? 0.0 : supply - q.amount_in;
        }
        next.accumulated_fees[0] += q.fee_paid;
    } else {
        double net_in = 0.0;
        if (exact_in) {
            q.amount_in = amount;
            net_in = net_of_fee(amount, fee);
            q.amount_out = quote_exact_in(pool.curve, cr, ci, co, net_in, adopted);
        } else {
            q.amount_out = amount;
            net_in = quote_exact_out(pool.curve, cr, ci, co, amount, adopted);
            q.amount_in = gross_of_fee(net_in, fee);
        }
        q.fee_paid = q.amount_in - net_in;
        if (adopted) {
            const double flat = in == 0 ? *adopted : 1.0 / *adopted;
            q.surcharge_component = net_in * flat - q.amount_out;
        }
        next.reserves[in] += q.amount_in;
        next.reserves[out] = std::max(0.0, next.reserves[out] - q.amount_out);
        next.accumulated_fees[in] += q.fee_paid;
    }

    try {
        q.spot_after = pool_spot(next, in, out);
    } catch (const Error&) {
        q.spot_after = kNaN;
    }
    q.mean_price = q.amount_in > 0.0 ? q.amount_out / q.amount_in : q.spot_before;
    return result;
}

Quote quote(const PoolState& pool, const TradeOrder& order) {
    const std::size_t in = pool.token_index(order.token_in);
    const std::size_t out = pool.token_index(order.token_out);
    return apply_trade(pool, in, out, order.amount, order.kind).quote;
}

SwapOutcome execute_swap(const PoolState& pool, const TradeOrder& order, const LedgerBook& ledgers) {
    const std::size_t in = pool.token_index(order.token_in);
    const std::size_t out = pool.token_index(order.token_out);
    require(std::isfinite(order.amount) && order.amount > 0.0, ErrorCode::Domain, "order amount must be positive");
    TradeResult traded = apply_trade(pool, in, out, order.amount, order.kind);
    const Quote& q = traded.quote;

    SwapOutcome result{std::move(traded.pool), {q, 0, {}}, ledgers};
    LedgerBook& book = result.ledgers;
    auto& deltas = result.receipt.deltas;
    const TokenId& tin = pool.tokens[in];
    const TokenId& tout = pool.tokens[out];

    // Outcome shares (LMSR) and the issued token (supply-sovereign) are minted and burned
    // by the pool; every other leg is a transfer against the pool account.
    const bool mints_out = (pool.is_lmsr() && out != 0) || (is_supply_sovereign(pool) && out == 1);
    const bool burns_in = (pool.is_lmsr() && in != 0) || (is_supply_sovereign(pool) && in == 1);

    if (burns_in) {
        book.burn(tin, order.trader, Amount(q.amount_in));
    } else {
        book.transfer(tin, order.trader, pool.account, Amount(q.amount_in));
        deltas.push_back({tin, pool.account, q.amount_in});
    }
    deltas.push_back({tin, order.trader, -q.amount_in});

    if (mints_out) {
        book.mint(tout, order.trader, Amount(q.amount_out));
    } else {
        book.transfer(tout, pool.account, order.trader, Amount(q.amount_out));
        deltas.push_back({tout, pool.account, -q.amount_out});
    }
    deltas.push_back({tout, order.trader, q.amount_out});

    result.receipt.pool_digest = state_digest(result.pool);
    return result;
}

LiquidityOutcome deposit_liquidity(const PoolState& pool, const AccountId& provider,
                                   const std::vector<double>& amounts, const LedgerBook& ledgers) {
    require(!is_supply_sovereign(pool), ErrorCode::Unsupported, "supply-sovereign pools take no LP deposits");
    require(!pool.is_lmsr(), ErrorCode::Unsupported, "LMSR pools are funded once, at creation");
    require(amounts.size() == pool.tokens.size(), ErrorCode::Domain, "deposit needs one amount per token");
    for (double a : amounts) check_finite_amount(a, "deposit amount");

    LiquidityOutcome result{pool, ledgers, 0.0, amounts};
    if (std::all_of(amounts.begin(), amounts.end(), [](double a) { return a == 0.0; })) return result;
    PoolState& next = result.pool;

    if (pool.lp_share_supply == 0.0) {
        double log_sum = 0.0;
        for (double a : amounts) {
            require(a > 0.0, ErrorCode::Domain, "the first deposit must be strictly positive in every token");
            log_sum += std::log(a);
        }
        result.shares = std::exp(log_sum / static_cast<double>(amounts.size()));
        if (auto* pa = std::get_if<PriceAdoption>(&next.curve)) pa->target_reserves = amounts;
    } else {
        const auto largest = std::max_element(pool.reserves.begin(), pool.reserves.end()) - pool.reserves.begin();
        const double ratio = amounts[largest] / pool.reserves[largest];
        for (std::size_t i = 0; i < amounts.size(); ++i) {
            const double expected = ratio * pool.reserves[i];
            require(std::abs(amounts[i] - expected) <= 1e-9 * std::max(amounts[i], expected),
                    ErrorCode::NotProportional, "deposit must be proportional to current reserves");
        }
        result.shares = pool.lp_share_supply * ratio;
        scale_targets(next, 1.0 + ratio);
    }
    for (std::size_t i = 0; i < amounts.size(); ++i) {
        result.ledgers.transfer(pool.tokens[i], provider, pool.account, Amount(amounts[i]));
        next.reserves[i] += amounts[i];
    }
    next.lp_share_supply += result.shares;
    next.lp_shares[provider] += result.shares;
    return result;
}

LiquidityOutcome withdraw_liquidity(const PoolState& pool, const AccountId& provider, double shares,
                                    const LedgerBook& ledgers) {
    require(!is_supply_sovereign(pool), ErrorCode::Unsupported, "supply-sovereign pools have no LP shares");
    require(!pool.is_lmsr() || pool.closed, ErrorCode::Unsupported,
            "LMSR liquidity can only be withdrawn after resolution");
    check_finite_amount(shares, "share amount");
    auto it = pool.lp_shares.find(provider);
    const double held = it == pool.lp_shares.end() ? 0.0 : it->second;
    require(shares <= held, ErrorCode::InsufficientBalance,
            provider.str() + " holds " + std::to_string(held) + " shares, cannot withdraw " + std::to_string(shares));

    LiquidityOutcome result{pool, ledgers, shares, std::vector<double>(pool.tokens.size(), 0.0)};
    if (shares == 0.0) return result;
    PoolState& next = result.pool;
    const bool everything = shares == pool.lp_share_supply;
    const double fraction = shares / pool.lp_share_supply;
    // LMSR pays out collateral only; outcome shares are not pool inventory.
    const std::size_t paid_tokens = pool.is_lmsr() ? 1 : pool.tokens.size();
    for (std::size_t i = 0; i < paid_tokens; ++i) {
        const double amount = everything ? pool.reserves[i] : pool.reserves[i] * fraction;
        result.amounts[i] = amount;
        next.reserves[i] = everything ? 0.0 : pool.reserves[i] - amount;
        result.ledgers.transfer(pool.tokens[i], pool.account, provider, Amount(amount));
    }
    if (!everything) scale_targets(next, 1.0 - fraction);
    next.lp_share_supply = everything ? 0.0 : pool.lp_share_supply - shares;
    if (shares == held) {
        next.lp_shares.erase(provider);
    } else {
        next.lp_shares[provider] = held - shares;
    }
    return result;
}

CurveTradeOutcome curve_buy(const PoolState& pool, const AccountId& buyer, double reserve_in,
                            const LedgerBook& ledgers) {
    require(is_supply_sovereign(pool), ErrorCode::Unsupported, "curve_buy needs a supply-sovereign pool");
    check_finite_amount(reserve_in, "reserve amount");
    if (reserve_in == 0.0) return {pool, ledgers, 0.0};
    SwapOutcome s = execute_swap(pool, {buyer, pool.tokens[0], pool.tokens[1], reserve_in, OrderKind::ExactIn}, ledgers);
    return {std::move(s.pool), std::move(s.ledgers), s.receipt.quote.amount_out};
}

CurveTradeOutcome curve_sell(const PoolState& pool, const AccountId& seller, double tokens_in,
                             const LedgerBook& ledgers) {
    require(is_supply_sovereign(pool), ErrorCode::Unsupported, "curve_sell needs a supply-sovereign pool");
    check_finite_amount(tokens_in, "token amount");
    require(tokens_in <= pool.circulating_supply, ErrorCode::Domain, "cannot sell more than the circulating supply");
    if (tokens_in == 0.0) return {pool, ledgers, 0.0};
    SwapOutcome s = execute_swap(pool, {seller, pool.tokens[1], pool.tokens[0], tokens_in, OrderKind::ExactIn}, ledgers);
    return {std::move(s.pool), std::move(s.ledgers), s.receipt.quote.amount_out};
}

PoolState set_oracle_price(const PoolState& pool, double price) {
    require(pool.archetype == Archetype::PriceAdoptingLpBased, ErrorCode::Unsupported,
            "only price-adopting pools take an oracle price");
    require(std::isfinite(price) && price > 0.0, ErrorCode::Domain, "oracle price must be positive");
    PoolState next = pool;
    next.oracle_price = price;
    return next;
}

Resolution resolve_prediction(const PoolState& pool, std::size_t winning_outcome, const LedgerBook& ledgers) {
    require(pool.is_lmsr(), ErrorCode::Unsupported, "only LMSR pools resolve");
    require(!pool.closed, ErrorCode::MarketClosed, "market " + pool.name + " is already resolved");
    const std::size_t outcomes = pool.tokens.size() - 1;
    require(winning_outcome < outcomes, ErrorCode::Domain, "unknown outcome index " + std::to_string(winning_outcome));

    Resolution result{pool, ledgers, 0.0};
    PoolState& next = result.pool;
    const TokenId& winner = pool.tokens[winning_outcome + 1];
    const auto holders = ledgers.at(winner).balances();
    for (const auto& [account, amount] : holders) {
        result.ledgers.transfer(pool.tokens[0], pool.account, account, amount);
        result.paid_out += amount.value();
    }
    for (std::size_t i = 1; i < pool.tokens.size(); ++i) {
        const auto balances = result.ledgers.at(pool.tokens[i]).balances();
        for (const auto& [account, amount] : balances) result.ledgers.burn(pool.tokens[i], account, amount);
        next.reserves[i] = 0.0;
    }
    next.reserves[0] = std::max(0.0, next.reserves[0] - result.paid_out);
    next.closed = true;
    return result;
}

}  // namespace ammlab
