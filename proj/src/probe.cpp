#include "ammlab/probe.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <map>

#include "ammlab/error.hpp"
#include "ammlab/random.hpp"

namespace ammlab {

namespace {

constexpr int kBoundSteps = 30;
constexpr double kMinFraction = 1e-4;
constexpr double kMaxFraction = 1e-1;
constexpr double kStrictGain = 1e-5;
constexpr double kSupplyBootstrap = 1000.0;
constexpr int kPathTrades = 8;

struct DimensionInfo {
    Dimension dimension;
    std::string_view name;
    bool probeable;
    std::vector<std::string> characteristics;
};

const std::vector<DimensionInfo>& dimension_table() {
    static const std::vector<DimensionInfo> table = {
        {Dimension::InformationIncorporation, "Information Incorporation", true,
         {"Incorporative", "Non-incorporative"}},
        {Dimension::LiquidityConcentration, "Liquidity Concentration", false,
         {"Automatic", "Function-based", "LP-based"}},
        {Dimension::LiquiditySensitivity, "Liquidity Sensitivity", true, {"Insensitive", "Sensitive"}},
        {Dimension::PathDeficiency, "Path Deficiency", true, {"Deficient", "Strictly Deficient"}},
        {Dimension::PathIndependence, "Path Independence", true, {"Path Dependent", "Path Independent"}},
        {Dimension::PriceBounding, "Price Bounding", true,
         {"Bounded from Above", "Bounded from Above and Below", "Bounded from Below", "Unbounded"}},
        {Dimension::PriceDiscovery, "Price Discovery", false,
         {"Constant-sum", "Constant-power-sum", "Constant-product", "Constant-product-sum", "Exponential Function",
          "Geometric Mean", "Logarithmic Market Scoring", "Price Adoption"}},
        {Dimension::TokenPriceSource, "Token Price Source", false, {"External", "Internal"}},
        {Dimension::TranslationInvariance, "Translation Invariance", true,
         {"Non-translation Invariant", "Translation Invariant"}},
        {Dimension::VolumeDependency, "Volume Dependency", true, {"Volume-dependent", "Volume-independent"}},
        {Dimension::NumberOfTokens, "Number of Tokens per Liquidity Pool", false, {"Three or More", "Two"}},
        {Dimension::RiskManagement, "Risk Management", false,
         {"Imbalance Surcharges", "Loss Insurance", "No Risk Management"}},
        {Dimension::SourceOfLiquidity, "Source of Liquidity", false, {"External", "Internal"}},
        {Dimension::SupportedTradingPairs, "Supported Trading Pairs", false, {"Open", "Restricted"}},
        {Dimension::Interoperability, "Interoperability", false, {"Interoperable", "Non-interoperable"}},
        {Dimension::LimitOrderFunctionality, "Limit Order Functionality", false, {"Included", "Not Included"}},
        {Dimension::ParameterAdjustment, "Parameter Adjustment", false, {"Automatic", "Fixed", "Manual"}},
    };
    return table;
}

const DimensionInfo& info(Dimension d) { return dimension_table()[static_cast<std::size_t>(d)]; }

// ---- probe subjects --------------------------------------------------------------------

struct Subject {
    PoolState base;
    std::size_t a = 0;  // probed token; spot(a -> b) is its price
    std::size_t b = 1;
};

bool supply_sovereign(const PoolState& p) { return p.archetype == Archetype::PriceDiscoveringSupplySovereign; }

PoolConfig scaled(PoolConfig config, double factor) {
    for (double& r : config.reserves) r *= factor;
    std::visit(
        [&](auto& c) {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, Lmsr>) c.b *= factor;
            if constexpr (std::is_same_v<T, PriceAdoption>) {
                for (double& t : c.target_reserves) t *= factor;
            }
        },
        config.curve);
    return config;
}

Subject prepare(const PoolConfig& config, double factor = 1.0) {
    Subject s;
    s.base = instantiate_pool(scaled(config, factor)).pool;
    if (const auto* pa = std::get_if<PriceAdoption>(&s.base.curve)) {
        s.base = set_oracle_price(s.base, pa->target_reserves[1] / pa->target_reserves[0]);
    }
    if (supply_sovereign(s.base)) {
        s.base = apply_trade(s.base, 0, 1, kSupplyBootstrap * factor).pool;
    }
    if (s.base.is_lmsr() || supply_sovereign(s.base)) {
        s.a = 1;
        s.b = 0;
    }
    return s;
}

/// Natural size unit for trades paying in `token`.
double trade_scale(const PoolState& p, std::size_t token) {
    if (const auto* l = std::get_if<Lmsr>(&p.curve)) return l->b;
    if (supply_sovereign(p)) return token == 0 ? p.reserves[0] : p.circulating_supply;
    return p.reserves[token];
}

/// Size unit for the probed token itself (its reserve, share count or supply).
double holding_scale(const PoolState& p, std::size_t token) {
    if (p.is_lmsr()) return p.reserves[token];
    if (supply_sovereign(p)) return token == 1 ? p.circulating_supply : p.reserves[0];
    return p.reserves[token];
}

PoolState without_fees(PoolState p) {
    p.fee.trade_fee = 0.0;
    return p;
}

double price_of(const PoolState& p, const Subject& s) { return pool_spot(p, s.a, s.b); }

double draw_fraction(Rng& rng) { return rng.log_uniform(kMinFraction, kMaxFraction); }

/// Moves the pool to a random nearby state with one to three trades.
PoolState perturb(const PoolState& base, Rng& rng) {
    PoolState p = base;
    const auto n = static_cast<std::uint64_t>(p.tokens.size());
    const int steps = 1 + static_cast<int>(rng.below(3));
    for (int i = 0; i < steps; ++i) {
        std::size_t in = 0;
        std::size_t out = 0;
        if (p.is_lmsr()) {
            out = 1 + rng.below(n - 1);  // buy a random outcome
        } else {
            in = rng.below(n);
            out = (in + 1 + rng.below(n - 1)) % n;
        }
        if (supply_sovereign(p) && in == 1 && p.circulating_supply == 0.0) continue;
        const double amount = draw_fraction(rng) * trade_scale(p, in);
        try {
            p = apply_trade(p, in, out, amount).pool;
        } catch (const Error&) {
        }
    }
    return p;
}

std::string three_way(double deviation, const std::string& invariant, const std::string& variant) {
    if (deviation < kInvariantTolerance) return invariant;
    if (deviation > kVariantThreshold) return variant;
    return std::string(kIndeterminate);
}

double relative_change(double before, double after) {
    if (before == after) return 0.0;
    return std::abs(after - before) / std::max(std::abs(before), std::abs(after));
}

// ---- individual probes -------------------------------------------------------------------

DimensionVerdict information_incorporation(const Subject& s, Rng& rng, int trials) {
    double worst = 0.0;
    int done = 0;
    const double before = price_of(s.base, s);
    for (int t = 0; t < trials; ++t) {
        const double dx = draw_fraction(rng) * trade_scale(s.base, s.b);
        try {
            const auto r = apply_trade(s.base, s.b, s.a, dx);
            worst = std::max(worst, relative_change(before, price_of(r.pool, s)));
            ++done;
        } catch (const Error&) {
        }
    }
    return {Dimension::InformationIncorporation, three_way(worst, "Non-incorporative", "Incorporative"), worst, done,
            kInvariantTolerance};
}

DimensionVerdict liquidity_sensitivity(const PoolConfig& config, const Subject& s, Rng& rng, int trials) {
    const Subject deep = prepare(config, 10.0);
    double worst = 0.0;
    int done = 0;
    for (int t = 0; t < trials; ++t) {
        const double dx = draw_fraction(rng) * trade_scale(s.base, s.b);
        try {
            const double shallow_impact =
                relative_change(price_of(s.base, s), price_of(apply_trade(s.base, s.b, s.a, dx).pool, s));
            const double deep_impact =
                relative_change(price_of(deep.base, deep), price_of(apply_trade(deep.base, deep.b, deep.a, dx).pool, deep));
            const double larger = std::max(shallow_impact, deep_impact);
            const double deviation = larger < 1e-14 ? 0.0 : std::abs(shallow_impact - deep_impact) / larger;
            worst = std::max(worst, deviation);
            ++done;
        } catch (const Error&) {
        }
    }
    return {Dimension::LiquiditySensitivity, three_way(worst, "Insensitive", "Sensitive"), worst, done,
            kInvariantTolerance};
}

DimensionVerdict path_deficiency(const Subject& s, Rng& rng, int trials) {
    double min_gain = std::numeric_limits<double>::infinity();
    int done = 0;
    for (int t = 0; t < trials; ++t) {
        const PoolState state = perturb(s.base, rng);
        // Outcome shares cannot be sold before they are bought, so LMSR round trips start
        // from collateral.
        const bool forward = s.base.is_lmsr() || rng.coin();
        const std::size_t x = forward ? s.b : s.a;
        const std::size_t y = forward ? s.a : s.b;
        const double dx = draw_fraction(rng) * trade_scale(state, x);
        try {
            const auto leg1 = apply_trade(state, x, y, dx);
            const auto leg2 = apply_trade(leg1.pool, y, x, leg1.quote.amount_out);
            min_gain = std::min(min_gain, (dx - leg2.quote.amount_out) / dx);
            ++done;
        } catch (const Error&) {
        }
    }
    std::string label(kIndeterminate);
    if (min_gain > kStrictGain) {
        label = "Strictly Deficient";
    } else if (min_gain >= -kInvariantTolerance) {
        label = "Deficient";
    }
    return {Dimension::PathDeficiency, label, done ? min_gain : 0.0, done, kInvariantTolerance};
}

std::vector<double> terminal_state(const PoolState& p) {
    std::vector<double> v = p.reserves;
    v.push_back(p.circulating_supply);
    return v;
}

DimensionVerdict path_independence(const Subject& s, Rng& rng, int trials) {
    const PoolState zero = without_fees(s.base);
    // LP pools lose the probed token when it is bought; LMSR and supply-sovereign pools
    // lose outstanding shares / supply when it is sold.
    const bool removal_on_sell = zero.is_lmsr() || supply_sovereign(zero);
    double worst = 0.0;
    int done = 0;
    for (int t = 0; t < trials; ++t) {
        PoolState start = perturb(zero, rng);
        if (start.is_lmsr()) {
            try {
                start = apply_trade(start, 0, s.a, rng.uniform(0.5, 2.0) * trade_scale(start, 0)).pool;
            } catch (const Error&) {
                continue;
            }
        }
        const double unit = holding_scale(start, s.a);
        std::vector<double> deltas(kPathTrades);
        double removed = 0.0;
        for (double& d : deltas) {
            d = (rng.coin() ? 1.0 : -1.0) * draw_fraction(rng) * unit;
            if ((d > 0.0) == removal_on_sell) removed += std::abs(d);
        }
        if (removed > 0.4 * unit) {
            for (double& d : deltas) {
                if ((d > 0.0) == removal_on_sell) d *= 0.4 * unit / removed;
            }
        }
        // Terminal state of the sequence plus, per component, the total volume moved.
        auto run = [&](const std::vector<double>& order) {
            PoolState p = start;
            std::vector<double> state = terminal_state(p);
            std::vector<double> volume(state.size(), 0.0);
            for (double d : order) {
                p = d > 0.0 ? apply_trade(p, s.a, s.b, d, OrderKind::ExactIn).pool
                            : apply_trade(p, s.b, s.a, -d, OrderKind::ExactOut).pool;
                const auto next = terminal_state(p);
                for (std::size_t i = 0; i < next.size(); ++i) volume[i] += std::abs(next[i] - state[i]);
                state = next;
            }
            return std::pair{state, volume};
        };
        std::vector<double> shuffled = deltas;
        rng.shuffle(shuffled.begin(), shuffled.end());
        if (shuffled == deltas) std::reverse(shuffled.begin(), shuffled.end());
        try {
            const auto [first, volume] = run(deltas);
            const auto second = run(shuffled).first;
            // Measured against the traded volume so deep pools do not dilute the effect.
            for (std::size_t i = 0; i < first.size(); ++i) {
                const double scale = std::max(volume[i], 1e-12 * std::max(std::abs(first[i]), 1.0));
                worst = std::max(worst, std::abs(first[i] - second[i]) / scale);
            }
            ++done;
        } catch (const Error&) {
        }
    }
    return {Dimension::PathIndependence, three_way(worst, "Path Independent", "Path Dependent"), worst, done,
            kInvariantTolerance};
}

double basket_value(const PoolState& p, const Subject& s) {
    double sum = 0.0;
    if (p.is_lmsr()) {
        for (std::size_t i = 1; i < p.tokens.size(); ++i) sum += pool_spot(p, i, 0);
        return sum;
    }
    for (std::size_t i = 0; i < p.tokens.size(); ++i) sum += i == s.b ? 1.0 : pool_spot(p, i, s.b);
    return sum;
}

DimensionVerdict translation_invariance(const Subject& s, Rng& rng, int trials) {
    const double reference = basket_value(s.base, s);
    double worst = 0.0;
    int done = 0;
    for (int t = 0; t < trials; ++t) {
        try {
            worst = std::max(worst, relative_change(reference, basket_value(perturb(s.base, rng), s)));
            ++done;
        } catch (const Error&) {
        }
    }
    return {Dimension::TranslationInvariance, three_way(worst, "Translation Invariant", "Non-translation Invariant"),
            worst, done, kInvariantTolerance};
}

DimensionVerdict volume_dependency(const Subject& s, Rng& rng, int trials) {
    double worst = 0.0;
    int done = 0;
    for (int t = 0; t < trials; ++t) {
        const double volume = draw_fraction(rng) * trade_scale(s.base, s.b);
        try {
            const double small = apply_trade(s.base, s.b, s.a, volume / 10.0).quote.mean_price;
            const double large = apply_trade(s.base, s.b, s.a, volume).quote.mean_price;
            worst = std::max(worst, relative_change(small, large));
            ++done;
        } catch (const Error&) {
        }
    }
    return {Dimension::VolumeDependency, three_way(worst, "Volume-independent", "Volume-dependent"), worst, done,
            kInvariantTolerance};
}

DimensionVerdict price_bounding(const Subject& s) {
    // Upward: keep buying the probed token with the whole opposite reserve.
    PoolState p = s.base;
    double price = price_of(p, s);
    double last_change = 0.0;
    bool refused = false;
    bool finite = std::isfinite(price);
    int steps = 0;
    for (; steps < kBoundSteps && finite; ++steps) {
        const double amount = p.is_lmsr() ? trade_scale(p, s.b) : holding_scale(p, s.b);
        try {
            p = apply_trade(p, s.b, s.a, amount).pool;
        } catch (const Error&) {
            refused = true;
            break;
        }
        const double next = price_of(p, s);
        finite = std::isfinite(next);
        last_change = relative_change(price, next);
        price = next;
    }
    const bool above = finite && (refused || last_change < kInvariantTolerance);

    // Downward: push the price of the probed token toward zero.
    p = s.base;
    bool below = true;
    for (int i = 0; i < kBoundSteps; ++i) {
        try {
            if (p.is_lmsr()) {
                const std::size_t other = s.a + 1 < p.tokens.size() ? s.a + 1 : 1;
                p = apply_trade(p, 0, other, trade_scale(p, 0)).pool;
            } else if (supply_sovereign(p)) {
                p = apply_trade(p, 1, 0, 0.5 * p.circulating_supply).pool;
            } else {
                p = apply_trade(p, s.a, s.b, holding_scale(p, s.a)).pool;
            }
        } catch (const Error&) {
            break;
        }
        const double next = price_of(p, s);
        if (!std::isfinite(next) || next < 0.0) {
            below = false;
            break;
        }
    }

    std::string label = "Unbounded";
    if (above && below) {
        label = "Bounded from Above and Below";
    } else if (above) {
        label = "Bounded from Above";
    } else if (below) {
        label = "Bounded from Below";
    }
    return {Dimension::PriceBounding, label, last_change, steps, kInvariantTolerance};
}

// ---- static dimensions ---------------------------------------------------------------------

std::string_view discovery_label(CurveKind kind) {
    switch (kind) {
        case CurveKind::ConstantProduct: return "Constant-product";
        case CurveKind::GeometricMean: return "Geometric Mean";
        case CurveKind::ConstantSum: return "Constant-sum";
        case CurveKind::ConstantProductSum: return "Constant-product-sum";
        case CurveKind::ConstantPowerSum: return "Constant-power-sum";
        case CurveKind::Lmsr: return "Logarithmic Market Scoring";
        case CurveKind::PriceAdoption: return "Price Adoption";
        case CurveKind::Exponential: return "Exponential Function";
    }
    return "";
}

std::string static_characteristic(const PoolConfig& config, Dimension d) {
    const CurveKind kind = curve_kind(config.curve);
    const bool adopting = config.archetype == Archetype::PriceAdoptingLpBased;
    const bool sovereign = config.archetype == Archetype::PriceDiscoveringSupplySovereign;
    switch (d) {
        case Dimension::LiquidityConcentration: return adopting ? "Automatic" : "Function-based";
        case Dimension::PriceDiscovery: return std::string(discovery_label(kind));
        case Dimension::TokenPriceSource: return adopting ? "External" : "Internal";
        case Dimension::NumberOfTokens: {
            const std::size_t n = kind == CurveKind::Lmsr ? config.tokens.size() - 1 : config.tokens.size();
            return n == 2 ? "Two" : "Three or More";
        }
        case Dimension::RiskManagement: {
            const auto* pa = std::get_if<PriceAdoption>(&config.curve);
            return pa && pa->k > 0.0 ? "Imbalance Surcharges" : "No Risk Management";
        }
        case Dimension::SourceOfLiquidity: return sovereign ? "Internal" : "External";
        case Dimension::SupportedTradingPairs:
            return sovereign || kind == CurveKind::ConstantSum ? "Restricted" : "Open";
        case Dimension::Interoperability: return "Non-interoperable";
        case Dimension::LimitOrderFunctionality: return "Not Included";
        case Dimension::ParameterAdjustment: return adopting ? "Automatic" : "Fixed";
        default: fail(ErrorCode::Unsupported, std::string(dimension_name(d)) + " is probed, not read from the pool definition");
    }
}

// ---- reference grid ------------------------------------------------------------------------

struct GridColumn {
    std::string_view amm;
    std::string_view builtin;
    std::array<std::string_view, 17> literal;
    std::map<Dimension, std::string_view> corrections;
};

const std::vector<GridColumn>& grid() {
    static const std::vector<GridColumn> columns = {
        {"Augur",
         "augur-like",
         {"Incorporative", "Function-based", "Sensitive", "Deficient", "Path Independent", "",
          "Logarithmic Market Scoring", "External", "Translation Invariant", "Volume-dependent", "Two",
          "No Risk Management", "External", "Open", "Non-interoperable", "Not Included", "Fixed"},
         {{Dimension::TokenPriceSource, "Internal"}, {Dimension::PriceBounding, "Bounded from Above and Below"}}},
        {"Bancor ST",
         "bancor-like",
         {"Incorporative", "Function-based", "Sensitive", "Deficient", "Path Independent", "", "Exponential Function",
          "External", "Non-translation Invariant", "Volume-dependent", "Three or More", "No Risk Management",
          "Internal", "Restricted", "Non-interoperable", "Not Included", "Fixed"},
         {{Dimension::TokenPriceSource, "Internal"},
          {Dimension::PriceBounding, "Bounded from Below"},
          {Dimension::NumberOfTokens, "Two"}}},
        {"Curve v1",
         "curve-v1-like",
         {"Incorporative", "Function-based", "Sensitive", "Strictly Deficient", "Path Independent",
          "Bounded from Above and Below", "Constant-product", "External", "Non-translation Invariant",
          "Volume-dependent", "Three or More", "No Risk Management", "External", "Open", "Non-interoperable",
          "Not Included", "Fixed"},
         {{Dimension::TokenPriceSource, "Internal"}, {Dimension::PriceDiscovery, "Constant-product-sum"}}},
        {"DODO",
         "dodo-like",
         {"Incorporative", "Automatic", "Sensitive", "Strictly Deficient", "Path Dependent",
          "Bounded from Above and Below", "Price Adoption", "Internal", "Non-translation Invariant",
          "Volume-dependent", "Three or More", "Imbalance Surcharges", "External", "Open", "Non-interoperable",
          "Not Included", "Automatic"},
         {{Dimension::TokenPriceSource, "External"}, {Dimension::NumberOfTokens, "Two"}}},
        {"mStable 2021",
         "mstable-2021-like",
         {"Non-incorporative", "Function-based", "Insensitive", "Strictly Deficient", "Path Independent",
          "Bounded from Below", "Constant-sum", "External", "Translation Invariant", "Volume-independent",
          "Three or More", "No Risk Management", "External", "Restricted", "Non-interoperable", "Not Included",
          "Fixed"},
         {{Dimension::TokenPriceSource, "Internal"}, {Dimension::PriceBounding, "Bounded from Above and Below"}}},
        {"Uniswap v2",
         "uniswap-v2-like",
         {"Incorporative", "Function-based", "Sensitive", "Strictly Deficient", "Path Independent",
          "Bounded from Above and Below", "", "External", "Non-translation Invariant", "Volume-dependent",
          "Three or More", "No Risk Management", "External", "Open", "Non-interoperable", "Not Included", "Fixed"},
         {{Dimension::TokenPriceSource, "Internal"},
          {Dimension::PriceBounding, "Bounded from Below"},
          {Dimension::PriceDiscovery, "Constant-product"},
          {Dimension::NumberOfTokens, "Two"}}},
    };
    return columns;
}

const GridColumn& grid_column(std::string_view amm) {
    for (const auto& c : grid()) {
        if (c.amm == amm) return c;
    }
    fail(ErrorCode::Domain, "no reference column for " + std::string(amm));
}

}  // namespace

const std::vector<Dimension>& all_dimensions() {
    static const std::vector<Dimension> dims = [] {
        std::vector<Dimension> out;
        for (const auto& d : dimension_table()) out.push_back(d.dimension);
        return out;
    }();
    return dims;
}

std::string_view dimension_name(Dimension d) { return info(d).name; }

std::optional<Dimension> dimension_from_name(std::string_view name) {
    for (const auto& d : dimension_table()) {
        if (d.name == name) return d.dimension;
    }
    return std::nullopt;
}

bool is_probeable(Dimension d) { return info(d).probeable; }

const std::vector<std::string>& legal_characteristics(Dimension d) { return info(d).characteristics; }

const DimensionVerdict& TaxonomyReport::at(Dimension d) const {
    for (const auto& v : verdicts) {
        if (v.dimension == d) return v;
    }
    fail(ErrorCode::Domain, "report has no verdict for " + std::string(dimension_name(d)));
}

std::string TaxonomyReport::to_csv() const {
    std::string out = "dimension,characteristic,max_deviation,trials,tolerance\n";
    char buf[64];
    for (const auto& v : verdicts) {
        out += dimension_name(v.dimension);
        out += ',';
        out += v.characteristic;
        std::snprintf(buf, sizeof buf, ",%.9g,%d,%.9g\n", v.max_deviation, v.trials, v.tolerance);
        out += buf;
    }
    return out;
}

DimensionVerdict run_dimension_probe(const PoolConfig& config, Dimension dimension, std::uint64_t seed, int trials) {
    require(is_probeable(dimension), ErrorCode::Unsupported,
            std::string(dimension_name(dimension)) + " is read from the pool spec, not probed");
    require(trials >= 100, ErrorCode::Domain, "probes need at least 100 trials");
    const Subject subject = prepare(config);
    Rng rng(seed ^ Rng::mix(static_cast<std::uint64_t>(dimension) + 1));
    switch (dimension) {
        case Dimension::InformationIncorporation: return information_incorporation(subject, rng, trials);
        case Dimension::LiquiditySensitivity: return liquidity_sensitivity(config, subject, rng, trials);
        case Dimension::PathDeficiency: return path_deficiency(subject, rng, trials);
        case Dimension::PathIndependence: return path_independence(subject, rng, trials);
        case Dimension::PriceBounding: return price_bounding(subject);
        case Dimension::TranslationInvariance: return translation_invariance(subject, rng, trials);
        case Dimension::VolumeDependency: return volume_dependency(subject, rng, trials);
        default: break;
    }
    fail(ErrorCode::Unsupported, "no probe for " + std::string(dimension_name(dimension)));
}

TaxonomyReport classify(const PoolConfig& config, std::uint64_t seed, int trials) {
    config.validate();
    TaxonomyReport report;
    report.pool = config.name;
    report.seed = seed;
    report.trials = trials;
    for (Dimension d : all_dimensions()) {
        if (is_probeable(d)) {
            report.verdicts.push_back(run_dimension_probe(config, d, seed, trials));
        } else {
            report.verdicts.push_back({d, static_characteristic(config, d), 0.0, 0, 0.0});
        }
    }
    return report;
}

const std::vector<ReferenceColumn>& reference_columns() {
    static const std::vector<ReferenceColumn> columns = [] {
        std::vector<ReferenceColumn> out;
        for (const auto& c : grid()) out.push_back({std::string(c.amm), std::string(c.builtin)});
        return out;
    }();
    return columns;
}

std::optional<ReferenceColumn> reference_for_builtin(std::string_view builtin) {
    for (const auto& c : reference_columns()) {
        if (c.builtin == builtin) return c;
    }
    return std::nullopt;
}

std::string reference_cell_literal(std::string_view amm, Dimension d) {
    return std::string(grid_column(amm).literal[static_cast<std::size_t>(d)]);
}

std::string reference_cell(std::string_view amm, Dimension d) {
    const auto& column = grid_column(amm);
    if (auto it = column.corrections.find(d); it != column.corrections.end()) return std::string(it->second);
    return std::string(column.literal[static_cast<std::size_t>(d)]);
}

}  // namespace ammlab
