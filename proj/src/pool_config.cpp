#include "ammlab/pool_config.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <map>
#include <set>

#include "ammlab/error.hpp"
#include "text.hpp"

namespace ammlab {

namespace {

struct Builtin {
    std::string_view name;
    std::string_view text;
};

constexpr std::array<Builtin, 6> kBuiltins = {{
    {"uniswap-v2-like", R"(archetype = price-discovering-lp-based
curve = constant-product
tokens = WETH, USDC
reserves = 1000, 1000000
fee = 0.003
)"},
    {"curve-v1-like", R"(archetype = price-discovering-lp-based
curve = constant-product-sum
chi = 1
tokens = DAI, USDC, USDT
reserves = 1000000, 980000, 1020000
fee = 0.0004
)"},
    {"mstable-2021-like", R"(archetype = price-discovering-lp-based
curve = constant-sum
tokens = USDC, USDT, DAI
reserves = 1000000, 1000000, 1000000
fee = 0.0006
)"},
    {"dodo-like", R"(archetype = price-adopting-lp-based
curve = price-adoption
k = 0.5
tokens = WETH, USDC
reserves = 1000, 1000000
target_reserves = 1000, 1000000
fee = 0.003
)"},
    {"bancor-like", R"(archetype = price-discovering-supply-sovereign
curve = exponential
kappa = 2
c = 1000
tokens = ETH, BNT
fee = 0
)"},
    {"augur-like", R"(archetype = price-discovering-lp-based
curve = lmsr
b = 100
tokens = DAI, YES, NO
reserves = 0, 0
fee = 0
)"},
}};

const std::set<std::string_view> kKnownKeys = {"archetype", "curve", "tokens", "reserves", "fee", "weights",
                                               "chi",       "t",     "b",      "k",        "target_reserves",
                                               "kappa",     "c"};

const std::map<CurveKind, std::set<std::string_view>> kCurveKeys = {
    {CurveKind::ConstantProduct, {}},
    {CurveKind::GeometricMean, {"weights"}},
    {CurveKind::ConstantSum, {}},
    {CurveKind::ConstantProductSum, {"chi"}},
    {CurveKind::ConstantPowerSum, {"t"}},
    {CurveKind::Lmsr, {"b"}},
    {CurveKind::PriceAdoption, {"k", "target_reserves"}},
    {CurveKind::Exponential, {"kappa", "c"}},
};

struct Entry {
    std::string value;
    std::size_t line = 0;
};

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
    fail(ErrorCode::Parse, "line " + std::to_string(line) + ": " + what);
}

double number(const Entry& e, std::string_view key) {
    const auto v = text::to_double(e.value);
    if (!v) parse_error(e.line, std::string(key) + " expects a number, got '" + e.value + "'");
    return *v;
}

std::vector<double> numbers(const Entry& e, std::string_view key) {
    std::vector<double> out;
    for (auto part : text::split(e.value, ',')) {
        const auto v = text::to_double(part);
        if (!v) parse_error(e.line, std::string(key) + " expects comma-separated numbers, got '" + e.value + "'");
        out.push_back(*v);
    }
    return out;
}

}  // namespace

PoolConfig parse_pool_config(std::string_view source, std::string name) {
    std::map<std::string, Entry> entries;
    std::size_t line_no = 0;
    for (auto raw : text::lines(source)) {
        ++line_no;
        const auto line = text::strip_comment(raw);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) parse_error(line_no, "expected 'key = value'");
        const std::string key(text::trim(line.substr(0, eq)));
        const std::string value(text::trim(line.substr(eq + 1)));
        if (!kKnownKeys.count(key)) parse_error(line_no, "unknown key '" + key + "'");
        if (value.empty()) parse_error(line_no, "empty value for '" + key + "'");
        if (!entries.emplace(key, Entry{value, line_no}).second) parse_error(line_no, "duplicate key '" + key + "'");
    }

    auto need = [&](const char* key) -> const Entry& {
        auto it = entries.find(key);
        if (it == entries.end()) fail(ErrorCode::Parse, std::string("missing required key '") + key + "'");
        return it->second;
    };

    PoolConfig config;
    config.name = std::move(name);
    const Entry& arch = need("archetype");
    const auto archetype = archetype_from_key(arch.value);
    if (!archetype) parse_error(arch.line, "unknown archetype '" + arch.value + "'");
    config.archetype = *archetype;

    const Entry& curve = need("curve");
    const auto kind = curve_kind_from_key(curve.value);
    if (!kind) parse_error(curve.line, "unknown curve '" + curve.value + "'");

    for (const auto& [key, entry] : entries) {
        const bool generic = key == "archetype" || key == "curve" || key == "tokens" || key == "reserves" ||
                             key == "fee";
        if (!generic && !kCurveKeys.at(*kind).count(key)) {
            parse_error(entry.line, "key '" + key + "' does not apply to curve " + curve.value);
        }
    }

    for (auto t : text::split(need("tokens").value, ',')) config.tokens.emplace_back(std::string(t));
    if (entries.count("reserves")) config.reserves = numbers(entries.at("reserves"), "reserves");
    if (entries.count("fee")) config.fee.trade_fee = number(entries.at("fee"), "fee");

    auto param = [&](const char* key, double fallback) {
        auto it = entries.find(key);
        return it == entries.end() ? fallback : number(it->second, key);
    };

    switch (*kind) {
        case CurveKind::ConstantProduct: config.curve = ConstantProduct{}; break;
        case CurveKind::ConstantSum: config.curve = ConstantSum{}; break;
        case CurveKind::GeometricMean: {
            GeometricMean g;
            if (entries.count("weights")) {
                g.weights = numbers(entries.at("weights"), "weights");
            } else {
                g.weights.assign(config.tokens.size(), 1.0 / static_cast<double>(config.tokens.size()));
            }
            config.curve = g;
            break;
        }
        case CurveKind::ConstantProductSum: config.curve = ConstantProductSum{param("chi", 0.0)}; break;
        case CurveKind::ConstantPowerSum: config.curve = ConstantPowerSum{param("t", 0.0)}; break;
        case CurveKind::Lmsr: config.curve = Lmsr{number(need("b"), "b")}; break;
        case CurveKind::PriceAdoption: {
            PriceAdoption pa;
            pa.k = number(need("k"), "k");
            pa.target_reserves =
                entries.count("target_reserves") ? numbers(entries.at("target_reserves"), "target_reserves")
                                                 : config.reserves;
            config.curve = pa;
            config.fee.surcharge_k = pa.k;
            break;
        }
        case CurveKind::Exponential:
            config.curve = Exponential{number(need("kappa"), "kappa"), number(need("c"), "c")};
            break;
    }
    config.validate();
    return config;
}

const std::vector<std::string>& builtin_pool_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& b : kBuiltins) out.emplace_back(b.name);
        return out;
    }();
    return names;
}

bool is_builtin_pool(std::string_view name) {
    return std::any_of(kBuiltins.begin(), kBuiltins.end(), [&](const Builtin& b) { return b.name == name; });
}

std::string_view builtin_pool_text(std::string_view name) {
    for (const auto& b : kBuiltins) {
        if (b.name == name) return b.text;
    }
    fail(ErrorCode::Parse, "no built-in pool named '" + std::string(name) + "'");
}

PoolConfig builtin_pool_config(std::string_view name) {
    return parse_pool_config(builtin_pool_text(name), std::string(name));
}

PoolConfig load_pool_config(const std::string& name_or_path) {
    if (is_builtin_pool(name_or_path)) return builtin_pool_config(name_or_path);
    std::string stem = name_or_path;
    if (const auto slash = stem.find_last_of('/'); slash != std::string::npos) stem = stem.substr(slash + 1);
    if (const auto dot = stem.find_last_of('.'); dot != std::string::npos && dot > 0) stem = stem.substr(0, dot);
    if (!std::ifstream(name_or_path)) {
        fail(ErrorCode::Parse, name_or_path + " is neither a built-in pool nor a readable file");
    }
    try {
        return parse_pool_config(text::read_file(name_or_path), stem);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::Parse) fail(ErrorCode::Parse, name_or_path + ": " + e.what());
        throw;
    }
}

}  // namespace ammlab
