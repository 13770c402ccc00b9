#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ammlab/curves.hpp"
#include "ammlab/engine.hpp"
#include "ammlab/pool_config.hpp"
#include "ammlab/probe.hpp"
#include "ammlab/sim.hpp"

namespace py = pybind11;
using namespace ammlab;

namespace {

std::vector<std::string> token_names(const PoolState& pool) {
    std::vector<std::string> out;
    for (const auto& t : pool.tokens) out.push_back(t.str());
    return out;
}

py::dict quote_dict(const PoolState& pool, const Quote& q) {
    py::dict d;
    d["token_in"] = pool.tokens[q.token_in].str();
    d["token_out"] = pool.tokens[q.token_out].str();
    d["amount_in"] = q.amount_in;
    d["amount_out"] = q.amount_out;
    d["fee_paid"] = q.fee_paid;
    d["surcharge_component"] = q.surcharge_component;
    d["spot_before"] = q.spot_before;
    d["spot_after"] = q.spot_after;
    d["mean_price"] = q.mean_price;
    return d;
}

}  // namespace

PYBIND11_MODULE(_ammlab, m) {
    m.doc() = "AMM engine, taxonomy probe and scenario simulator";

    static py::handle error = py::exception<Error>(m, "Error").release();
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::set_error(error, (std::string(to_string(e.code())) + ": " + e.what()).c_str());
        }
    });

    py::class_<PoolState>(m, "Pool")
        .def_property_readonly("name", [](const PoolState& p) { return p.name; })
        .def_property_readonly("archetype", [](const PoolState& p) { return std::string(archetype_key(p.archetype)); })
        .def_property_readonly("curve", [](const PoolState& p) { return std::string(curve_key(curve_kind(p.curve))); })
        .def_property_readonly("tokens", &token_names)
        .def_property_readonly("reserves", [](const PoolState& p) { return p.reserves; })
        .def_property_readonly("fee", [](const PoolState& p) { return p.fee.trade_fee; })
        .def_property_readonly("circulating_supply", [](const PoolState& p) { return p.circulating_supply; })
        .def("spot", [](const PoolState& p, const std::string& in, const std::string& out) {
            return pool_spot(p, p.token_index(TokenId(in)), p.token_index(TokenId(out)));
        })
        .def("invariant", &pool_invariant)
        .def("quote",
             [](const PoolState& p, const std::string& in, const std::string& out, double amount, bool exact_out) {
                 const Quote q = quote(p, {AccountId("trader"), TokenId(in), TokenId(out), amount,
                                           exact_out ? OrderKind::ExactOut : OrderKind::ExactIn});
                 return quote_dict(p, q);
             },
             py::arg("token_in"), py::arg("token_out"), py::arg("amount"), py::arg("exact_out") = false)
        .def("trade",
             [](const PoolState& p, const std::string& in, const std::string& out, double amount) {
                 return apply_trade(p, p.token_index(TokenId(in)), p.token_index(TokenId(out)), amount).pool;
             },
             "Pool state after an exact-in trade (the original is unchanged)")
        .def("with_oracle", &set_oracle_price);

    m.def("builtin_pools", &builtin_pool_names);
    m.def(
        "load_pool",
        [](const std::string& spec, std::optional<double> oracle) {
            PoolState pool = instantiate_pool(load_pool_config(spec)).pool;
            if (oracle) pool = set_oracle_price(pool, *oracle);
            return pool;
        },
        py::arg("spec"), py::arg("oracle") = py::none());

    m.def(
        "classify",
        [](const std::string& spec, std::uint64_t seed, int trials) {
            const TaxonomyReport r = classify(load_pool_config(spec), seed, trials);
            py::dict d;
            for (const auto& v : r.verdicts) d[py::str(std::string(dimension_name(v.dimension)))] = v.characteristic;
            return d;
        },
        py::arg("spec"), py::arg("seed"), py::arg("trials") = 200,
        "Dimension name to characteristic for a built-in pool name or pool file");

    m.def(
        "simulate",
        [](const std::string& scenario_text, const std::string& prices_csv) {
            const Scenario sc = parse_scenario(scenario_text);
            const PriceSeries prices = prices_csv.empty() ? PriceSeries{} : parse_price_series(prices_csv);
            const ScenarioRun run = run_scenario(sc, prices);
            if (run.failure) throw Error(ErrorCode::Domain, run.failure->message);
            return metrics_csv(run.metrics);
        },
        py::arg("scenario"), py::arg("prices") = "", "Runs scenario text and returns the metrics CSV");

    m.def("solve_stableswap_d", [](const std::vector<double>& r, double chi) { return solve_stableswap_d(r, chi); });
    m.def("lmsr_cost", [](double b, const std::vector<double>& q) { return lmsr_cost(b, q); });
    m.def("lmsr_prices", [](double b, const std::vector<double>& q) { return lmsr_prices(b, q); });
    m.def("bonding_trade", &bonding_trade, py::arg("kappa"), py::arg("c"), py::arg("supply"), py::arg("d_supply"));
}
