#include "ammlab/sim.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "ammlab/error.hpp"
#include "ammlab/pool_config.hpp"
#include "ammlab/random.hpp"
#include "text.hpp"

namespace ammlab {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

[[noreturn]] void line_error(std::size_t line, const std::string& what) {
    fail(ErrorCode::Parse, "line " + std::to_string(line) + ": " + what);
}

bool supply_sovereign(const PoolState& pool) {
    return pool.archetype == Archetype::PriceDiscoveringSupplySovereign;
}

/// Values of every pool token in units of the quoted pair's quote token. The base is marked at
/// the reference; anything else at the pool's own spot into the quote token.
std::vector<double> marks(const PoolState& pool, double reference) {
    const auto [base, quote] = quoted_pair(pool);
    std::vector<double> m(pool.tokens.size(), 1.0);
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i == quote) continue;
        if (i == base) {
            m[i] = reference;
            continue;
        }
        try {
            m[i] = pool_spot(pool, i, quote);
        } catch (const Error&) {
            m[i] = kNaN;
        }
    }
    return m;
}

/// Value of the liquidity the pool holds for its providers.
double pool_value(const PoolState& pool, const std::vector<double>& m) {
    if (pool.is_lmsr()) {
        double liability = 0.0;
        for (std::size_t i = 1; i < pool.tokens.size(); ++i) liability += pool.reserves[i] * m[i];
        return pool.reserves[0] - liability;
    }
    if (supply_sovereign(pool)) return pool.reserves[0] * m[0];
    double v = 0.0;
    for (std::size_t i = 0; i < m.size(); ++i) v += pool.reserves[i] * m[i];
    return v;
}

double holdings_value(const std::vector<double>& held, const std::vector<double>& m) {
    double v = 0.0;
    for (std::size_t i = 0; i < held.size(); ++i) v += held[i] * m[i];
    return v;
}

double fees_value(const PoolState& pool, const std::vector<double>& m) {
    double v = 0.0;
    for (std::size_t i = 0; i < pool.accumulated_fees.size() && i < m.size(); ++i) {
        if (pool.accumulated_fees[i] != 0.0) v += pool.accumulated_fees[i] * m[i];
    }
    return v;
}

/// Size scale for searching trades that sell token `s`.
double trade_scale(const PoolState& pool, std::size_t s) {
    double r = 0.0;
    if (pool.is_lmsr()) {
        r = pool.reserves[0];
        if (s != 0) r = std::max(r, pool.reserves[s]);
    } else if (supply_sovereign(pool)) {
        r = s == 0 ? pool.reserves[0] : pool.circulating_supply;
    } else {
        r = pool.reserves[s];
    }
    return r > 0.0 ? r : 1.0;
}

struct Direction {
    std::size_t sell;
    std::size_t buy;
    double sell_mark;
    double buy_mark;
};

double profit(const PoolState& pool, const Direction& d, double x) {
    if (x <= 0.0) return 0.0;
    try {
        const Quote q = apply_trade(pool, d.sell, d.buy, x).quote;
        return q.amount_out * d.buy_mark - x * d.sell_mark;
    } catch (const Error&) {
        return -std::numeric_limits<double>::infinity();
    }
}

/// Golden-section maximisation of a unimodal profit over trade size.
double best_size(const PoolState& pool, const Direction& d) {
    const double scale = trade_scale(pool, d.sell);
    double hi = scale;
    for (int i = 0; i < 64 && profit(pool, d, 2.0 * hi) > profit(pool, d, hi); ++i) hi *= 2.0;
    double a = 0.0;
    double b = 2.0 * hi;
    const double tol = 1e-9 * scale;
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - inv_phi * (b - a);
    double e = a + inv_phi * (b - a);
    double fc = profit(pool, d, c);
    double fe = profit(pool, d, e);
    while (b - a > tol) {
        if (fc >= fe) {
            b = e;
            e = c;
            fe = fc;
            c = b - inv_phi * (b - a);
            fc = profit(pool, d, c);
        } else {
            a = c;
            c = e;
            fc = fe;
            e = a + inv_phi * (b - a);
            fe = profit(pool, d, e);
        }
    }
    return fc >= fe ? c : e;
}

std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double parse_number(std::string_view word, std::size_t line, const char* what) {
    const auto v = text::to_double(word);
    if (!v) line_error(line, std::string(what) + " expects a number, got '" + std::string(word) + "'");
    return *v;
}

}  // namespace

PriceSeries parse_price_series(std::string_view source) {
    PriceSeries series;
    std::size_t line_no = 0;
    bool header = false;
    for (auto raw : text::lines(source)) {
        ++line_no;
        const auto line = text::trim(raw);
        if (line.empty()) continue;
        if (!header) {
            const auto cols = text::split(line, ',');
            if (cols.size() != 2 || cols[0] != "step" || cols[1] != "price") {
                line_error(line_no, "expected header 'step,price'");
            }
            header = true;
            continue;
        }
        const auto cols = text::split(line, ',');
        if (cols.size() != 2) line_error(line_no, "expected 'step,price'");
        const auto step = text::to_integer(cols[0]);
        const auto price = text::to_double(cols[1]);
        if (!step) line_error(line_no, "step must be an integer, got '" + std::string(cols[0]) + "'");
        if (!price || !std::isfinite(*price) || *price <= 0.0) {
            line_error(line_no, "price must be a positive number, got '" + std::string(cols[1]) + "'");
        }
        if (!series.empty() && *step <= series.back().step) {
            line_error(line_no, "steps must be strictly increasing");
        }
        series.push_back({*step, *price});
    }
    if (!header) fail(ErrorCode::Parse, "price series is missing the 'step,price' header");
    return series;
}

PriceSeries load_price_series(const std::string& path) {
    try {
        return parse_price_series(text::read_file(path));
    } catch (const Error& e) {
        if (e.code() == ErrorCode::Parse) fail(ErrorCode::Parse, path + ": " + e.what());
        throw;
    }
}

std::optional<double> price_at(const PriceSeries& series, long long step) {
    std::optional<double> found;
    for (const auto& p : series) {
        if (p.step > step) break;
        found = p.price;
    }
    return found;
}

QuotedPair quoted_pair(const PoolState& pool) {
    if (pool.is_lmsr() || supply_sovereign(pool)) return {1, 0};
    return {0, 1};
}

double quoted_spot(const PoolState& pool) {
    const auto [base, quote] = quoted_pair(pool);
    return pool_spot(pool, base, quote);
}

ArbitrageOutcome arbitrage_step(const PoolState& pool, double reference_price, const AccountId& arbitrageur,
                                const LedgerBook& ledgers) {
    require(std::isfinite(reference_price) && reference_price > 0.0, ErrorCode::Domain,
            "reference price must be positive");
    ArbitrageOutcome out{pool, ledgers, std::nullopt};
    const auto [base, quote] = quoted_pair(pool);
    const double f = pool.fee.trade_fee;

    // Marginal profit of the first unit decides the side; inside the fee band neither pays.
    std::optional<Direction> side;
    const double sell_base = pool_spot(pool, base, quote) * (1.0 - f) - reference_price;
    if (sell_base > 0.0) {
        side = Direction{base, quote, reference_price, 1.0};
    } else {
        const double buy_base = pool_spot(pool, quote, base) * (1.0 - f) * reference_price - 1.0;
        if (buy_base > 0.0) side = Direction{quote, base, 1.0, reference_price};
    }
    if (!side) return out;

    const double x = best_size(pool, *side);
    if (!(profit(pool, *side, x) > 0.0)) return out;

    SwapOutcome s = execute_swap(pool, {arbitrageur, pool.tokens[side->sell], pool.tokens[side->buy], x}, ledgers);
    out.pool = std::move(s.pool);
    out.ledgers = std::move(s.ledgers);
    out.receipt = std::move(s.receipt);
    return out;
}

Scenario parse_scenario(std::string_view source) {
    Scenario sc;
    bool have_pool = false;
    std::size_t line_no = 0;
    for (auto raw : text::lines(source)) {
        ++line_no;
        const auto line = text::strip_comment(raw);
        if (line.empty()) continue;
        const auto w = text::words(line);
        const std::string head(w[0]);

        if (head == "pool") {
            if (w.size() != 2) line_error(line_no, "expected 'pool <name|path>'");
            sc.pool = std::string(w[1]);
            have_pool = true;
        } else if (head == "creator") {
            if (w.size() != 2) line_error(line_no, "expected 'creator <account>'");
            sc.creator = AccountId(std::string(w[1]));
        } else if (head == "fund") {
            if (w.size() != 4) line_error(line_no, "expected 'fund <account> <token> <amount>'");
            const double amount = parse_number(w[3], line_no, "fund");
            if (!(amount >= 0.0) || !std::isfinite(amount)) line_error(line_no, "fund amount must be non-negative");
            sc.endowments.push_back({AccountId(std::string(w[1])), TokenId(std::string(w[2])), amount});
        } else if (head == "seed") {
            const auto seed = w.size() == 2 ? text::to_integer(w[1]) : std::nullopt;
            if (!seed || *seed < 0) line_error(line_no, "expected 'seed <non-negative integer>'");
            sc.seed = static_cast<std::uint64_t>(*seed);
        } else {
            const auto step = text::to_integer(w[0]);
            if (!step) line_error(line_no, "unknown directive '" + head + "'");
            if (w.size() < 2) line_error(line_no, "missing event verb");
            ScenarioEvent ev;
            ev.step = *step;
            ev.verb = std::string(w[1]);
            ev.line = line_no;
            for (std::size_t i = 2; i < w.size(); ++i) ev.args.emplace_back(w[i]);
            const auto n = ev.args.size();
            const auto& v = ev.verb;
            const bool ok = (v == "trade" && n == 4) || (v == "deposit" && n >= 2) || (v == "withdraw" && n == 2) ||
                            (v == "oracle" && n == 1) || (v == "arb" && n == 1) || (v == "resolve" && n == 1);
            if (v != "trade" && v != "deposit" && v != "withdraw" && v != "oracle" && v != "arb" && v != "resolve") {
                line_error(line_no, "unknown event '" + v + "'");
            }
            if (!ok) line_error(line_no, "wrong number of arguments for '" + v + "'");
            if (!sc.events.empty() && ev.step < sc.events.back().step) {
                line_error(line_no, "event steps must not decrease");
            }
            sc.events.push_back(std::move(ev));
        }
    }
    if (!have_pool) fail(ErrorCode::Parse, "scenario has no 'pool' directive");
    return sc;
}

Scenario load_scenario(const std::string& path) {
    Scenario sc;
    try {
        sc = parse_scenario(text::read_file(path));
    } catch (const Error& e) {
        if (e.code() == ErrorCode::Parse) fail(ErrorCode::Parse, path + ": " + e.what());
        throw;
    }
    if (!is_builtin_pool(sc.pool) && !sc.pool.empty() && sc.pool.front() != '/') {
        if (const auto slash = path.find_last_of('/'); slash != std::string::npos) {
            sc.pool = path.substr(0, slash + 1) + sc.pool;
        }
    }
    return sc;
}

ScenarioRun run_scenario(const Scenario& scenario, const PriceSeries& prices, const LedgerBook& ledgers) {
    const PoolConfig config = load_pool_config(scenario.pool);
    PoolCreation created = instantiate_pool(config, scenario.creator, ledgers);
    ScenarioRun run{{}, std::move(created.pool), std::move(created.ledgers), std::nullopt};
    for (const auto& e : scenario.endowments) {
        run.ledgers.register_token(e.token);
        run.ledgers.mint(e.token, e.account, Amount(e.amount));
    }

    // Token amounts the providers would hold had they not deposited.
    std::vector<double> held(run.pool.tokens.size(), 0.0);
    const auto initial = default_initial_deposit(config);
    for (std::size_t i = 0; i < initial.size() && i < held.size(); ++i) held[i] = initial[i];

    Rng rng(scenario.seed);
    auto amount_arg = [&](const std::string& word, std::size_t line) {
        if (!word.empty() && word.front() == '~') {
            const double x = parse_number(std::string_view(word).substr(1), line, "amount");
            return rng.uniform(0.5 * x, 1.5 * x);
        }
        return parse_number(word, line, "amount");
    };

    for (std::size_t idx = 0; idx < scenario.events.size(); ++idx) {
        const auto& ev = scenario.events[idx];
        const auto reference = price_at(prices, ev.step);
        try {
            PoolState& pool = run.pool;
            const auto& a = ev.args;
            if (ev.verb == "trade") {
                const double amount = amount_arg(a[3], ev.line);
                SwapOutcome s = execute_swap(pool, {AccountId(a[0]), TokenId(a[1]), TokenId(a[2]), amount}, run.ledgers);
                pool = std::move(s.pool);
                run.ledgers = std::move(s.ledgers);
            } else if (ev.verb == "deposit") {
                std::vector<double> amounts;
                for (std::size_t i = 1; i < a.size(); ++i) amounts.push_back(parse_number(a[i], ev.line, "deposit"));
                LiquidityOutcome l = deposit_liquidity(pool, AccountId(a[0]), amounts, run.ledgers);
                for (std::size_t i = 0; i < amounts.size(); ++i) held[i] += amounts[i];
                pool = std::move(l.pool);
                run.ledgers = std::move(l.ledgers);
            } else if (ev.verb == "withdraw") {
                const AccountId who(a[0]);
                const auto it = pool.lp_shares.find(who);
                const double owned = it == pool.lp_shares.end() ? 0.0 : it->second;
                const double shares = a[1] == "all" ? owned : parse_number(a[1], ev.line, "withdraw");
                const double fraction = pool.lp_share_supply > 0.0 ? shares / pool.lp_share_supply : 0.0;
                LiquidityOutcome l = withdraw_liquidity(pool, who, shares, run.ledgers);
                for (double& h : held) h *= 1.0 - fraction;
                pool = std::move(l.pool);
                run.ledgers = std::move(l.ledgers);
            } else if (ev.verb == "oracle") {
                pool = set_oracle_price(pool, parse_number(a[0], ev.line, "oracle"));
            } else if (ev.verb == "arb") {
                require(reference.has_value(), ErrorCode::Domain,
                        "no reference price at or before step " + std::to_string(ev.step));
                ArbitrageOutcome arb = arbitrage_step(pool, *reference, AccountId(a[0]), run.ledgers);
                pool = std::move(arb.pool);
                run.ledgers = std::move(arb.ledgers);
            } else if (ev.verb == "resolve") {
                std::size_t outcome = 0;
                if (const auto n = text::to_integer(a[0])) {
                    require(*n >= 0, ErrorCode::Domain, "outcome index must be non-negative");
                    outcome = static_cast<std::size_t>(*n);
                } else {
                    const std::size_t t = pool.token_index(TokenId(a[0]));
                    require(t > 0, ErrorCode::Domain, "the collateral token is not an outcome");
                    outcome = t - 1;
                }
                Resolution r = resolve_prediction(pool, outcome, run.ledgers);
                pool = std::move(r.pool);
                run.ledgers = std::move(r.ledgers);
            }

            MetricRecord m;
            m.step = ev.step;
            m.event = ev.verb;
            try {
                m.spot = quoted_spot(pool);
            } catch (const Error&) {
                m.spot = kNaN;
            }
            m.reference = reference.value_or(kNaN);
            m.tracking_error = std::abs(m.spot - m.reference) / m.reference;
            try {
                m.invariant = pool_invariant(pool);
            } catch (const Error&) {
                m.invariant = kNaN;
            }
            // Without a reference the pool's own spot is the only mark available.
            const auto mk = marks(pool, reference.value_or(m.spot));
            m.lp_value = pool_value(pool, mk);
            if (supply_sovereign(pool)) {
                m.divergence_loss = kNaN;
            } else {
                const double hold = holdings_value(held, mk);
                m.divergence_loss = hold > 0.0 ? m.lp_value / hold - 1.0 : kNaN;
            }
            m.fees_cum = fees_value(pool, mk);
            run.metrics.push_back(std::move(m));
        } catch (const Error& e) {
            run.failure = ScenarioFailure{idx, "event " + std::to_string(idx) + " (line " + std::to_string(ev.line) +
                                                   ", " + ev.verb + "): " + e.what()};
            break;
        }
    }
    return run;
}

std::string metrics_csv(const std::vector<MetricRecord>& metrics) {
    std::string out = "step,event,spot,reference,tracking_error,invariant,lp_value,divergence_loss,fees_cum\n";
    for (const auto& m : metrics) {
        out += std::to_string(m.step);
        out += ',' + m.event;
        for (double v : {m.spot, m.reference, m.tracking_error, m.invariant, m.lp_value, m.divergence_loss, m.fees_cum}) {
            out += ',' + format_g17(v);
        }
        out += '\n';
    }
    return out;
}

}  // namespace ammlab
