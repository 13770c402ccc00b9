#include "ammlab/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>

#include "ammlab/engine.hpp"
#include "ammlab/error.hpp"
#include "ammlab/pool_config.hpp"
#include "ammlab/probe.hpp"
#include "ammlab/sim.hpp"

namespace ammlab {

namespace {

std::string g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

PoolState open_pool(const std::string& spec, std::optional<double> oracle) {
    PoolState pool = instantiate_pool(load_pool_config(spec)).pool;
    if (oracle) pool = set_oracle_price(pool, *oracle);
    return pool;
}

void emit(const std::string& data, const std::string& path, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << data;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) fail(ErrorCode::Parse, "cannot write " + path);
    file << data;
}

std::string one_line(std::string s) {
    std::replace(s.begin(), s.end(), '\n', ' ');
    return s;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Automated-market-maker engine, taxonomy probe and scenario simulator", "ammlab"};
    app.require_subcommand(1, 1);

    std::string pool_spec;
    std::string out_path;
    std::optional<double> oracle;

    auto* quote_cmd = app.add_subcommand("quote", "Quote one trade against a pool");
    std::string token_in;
    std::string token_out;
    double amount = 0.0;
    bool exact_out = false;
    quote_cmd->add_option("--pool", pool_spec, "Built-in pool name or pool file")->required();
    quote_cmd->add_option("--in", token_in, "Token sold to the pool")->required();
    quote_cmd->add_option("--out", token_out, "Token bought from the pool")->required();
    quote_cmd->add_option("--amount", amount, "Trade size")->required();
    quote_cmd->add_flag("--exact-out", exact_out, "Treat --amount as the desired output");
    quote_cmd->add_option("--oracle", oracle, "Adopted price for price-adopting pools (token 0 in token 1)");

    auto* classify_cmd = app.add_subcommand("classify", "Classify a pool along the taxonomy dimensions");
    std::uint64_t seed = 0;
    int trials = 200;
    classify_cmd->add_option("--pool", pool_spec, "Built-in pool name or pool file")->required();
    classify_cmd->add_option("--seed", seed, "Probe seed")->required();
    classify_cmd->add_option("--trials", trials, "Random trials per probe")->check(CLI::Range(100, 1000000));
    classify_cmd->add_option("--out", out_path, "Output CSV (default stdout)");

    auto* simulate_cmd = app.add_subcommand("simulate", "Run a scenario and write per-event metrics");
    std::string scenario_path;
    std::string prices_path;
    simulate_cmd->add_option("--scenario", scenario_path, "Scenario file")->required();
    simulate_cmd->add_option("--prices", prices_path, "Reference price series CSV");
    simulate_cmd->add_option("--out", out_path, "Output CSV (default stdout)");

    auto* table_cmd = app.add_subcommand("curve-table", "Tabulate quotes over log-spaced trade sizes");
    int samples = 0;
    std::string table_in;
    std::string table_out;
    double max_amount = 0.0;
    table_cmd->add_option("--pool", pool_spec, "Built-in pool name or pool file")->required();
    table_cmd->add_option("--samples", samples, "Number of trade sizes")->required()->check(CLI::PositiveNumber);
    table_cmd->add_option("--out", out_path, "Output CSV (default stdout)");
    table_cmd->add_option("--in", table_in, "Token sold (default: the pool's quote token)");
    table_cmd->add_option("--to", table_out, "Token bought (default: the pool's base token)");
    table_cmd->add_option("--max", max_amount, "Largest trade size (default: the input reserve)")
        ->check(CLI::PositiveNumber);
    table_cmd->add_option("--oracle", oracle, "Adopted price for price-adopting pools (token 0 in token 1)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "ammlab: " << one_line(e.what()) << '\n';
        return 1;
    }

    try {
        if (quote_cmd->parsed()) {
            const PoolState pool = open_pool(pool_spec, oracle);
            TradeOrder order{AccountId("trader"), TokenId(token_in), TokenId(token_out), amount,
                             exact_out ? OrderKind::ExactOut : OrderKind::ExactIn};
            const Quote q = quote(pool, order);
            out << "token_in " << token_in << '\n'
                << "token_out " << token_out << '\n'
                << "amount_in " << g17(q.amount_in) << '\n'
                << "amount_out " << g17(q.amount_out) << '\n'
                << "fee_paid " << g17(q.fee_paid) << '\n'
                << "surcharge_component " << g17(q.surcharge_component) << '\n'
                << "spot_before " << g17(q.spot_before) << '\n'
                << "spot_after " << g17(q.spot_after) << '\n'
                << "mean_price " << g17(q.mean_price) << '\n';
        } else if (classify_cmd->parsed()) {
            emit(classify(load_pool_config(pool_spec), seed, trials).to_csv(), out_path, out);
        } else if (simulate_cmd->parsed()) {
            const Scenario sc = load_scenario(scenario_path);
            const PriceSeries prices = prices_path.empty() ? PriceSeries{} : load_price_series(prices_path);
            const ScenarioRun run = run_scenario(sc, prices);
            emit(metrics_csv(run.metrics), out_path, out);
            if (run.failure) {
                err << "ammlab: " << one_line(run.failure->message) << '\n';
                return 2;
            }
        } else if (table_cmd->parsed()) {
            const PoolState pool = open_pool(pool_spec, oracle);
            const auto pair = quoted_pair(pool);
            const std::size_t in = table_in.empty() ? pair.quote : pool.token_index(TokenId(table_in));
            const std::size_t to = table_out.empty() ? pair.base : pool.token_index(TokenId(table_out));
            double top = max_amount;
            if (top <= 0.0) {
                top = pool.is_lmsr() ? pool.reserves[0] : pool.reserves.size() > in ? pool.reserves[in] : 0.0;
                if (!(top > 0.0)) top = 1000.0;
            }
            std::string csv = "amount_in,amount_out,mean_price,spot_after\n";
            for (int i = 0; i < samples; ++i) {
                const double t = samples == 1 ? 1.0 : static_cast<double>(i) / (samples - 1);
                const double x = top * std::pow(10.0, -4.0 * (1.0 - t));
                const Quote q = apply_trade(pool, in, to, x).quote;
                csv += g17(q.amount_in) + ',' + g17(q.amount_out) + ',' + g17(q.mean_price) + ',' +
                       g17(q.spot_after) + '\n';
            }
            emit(csv, out_path, out);
        }
    } catch (const Error& e) {
        err << "ammlab: " << to_string(e.code()) << ": " << one_line(e.what()) << '\n';
        return 2;
    }
    return 0;
}

}  // namespace ammlab
