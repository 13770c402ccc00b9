#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "ammlab/error.hpp"
#include "ammlab/pool_config.hpp"

using namespace ammlab;

namespace {

std::string parse_error_of(const std::string& text) {
    try {
        parse_pool_config(text);
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::Parse);
        return e.what();
    }
    ADD_FAILURE() << "parsed without error";
    return {};
}

}  // namespace

TEST(PoolConfigParse, AllBuiltinsParse) {
    ASSERT_EQ(builtin_pool_names().size(), 6u);
    for (const auto& name : builtin_pool_names()) {
        const PoolConfig c = builtin_pool_config(name);
        EXPECT_EQ(c.name, name);
        EXPECT_NO_THROW(instantiate_pool(c)) << name;
    }
}

TEST(PoolConfigParse, UniswapLike) {
    const PoolConfig c = builtin_pool_config("uniswap-v2-like");
    EXPECT_EQ(c.archetype, Archetype::PriceDiscoveringLpBased);
    EXPECT_TRUE(std::holds_alternative<ConstantProduct>(c.curve));
    EXPECT_EQ(c.tokens, (std::vector<TokenId>{"WETH", "USDC"}));
    EXPECT_EQ(c.reserves, (std::vector<double>{1000, 1000000}));
    EXPECT_EQ(c.fee.trade_fee, 0.003);
}

TEST(PoolConfigParse, CurveParameters) {
    const PoolConfig dodo = builtin_pool_config("dodo-like");
    EXPECT_EQ(std::get<PriceAdoption>(dodo.curve).k, 0.5);
    EXPECT_EQ(dodo.fee.surcharge_k, 0.5);
    const PoolConfig curve = builtin_pool_config("curve-v1-like");
    EXPECT_EQ(std::get<ConstantProductSum>(curve.curve).chi, 1.0);
    const PoolConfig gm = parse_pool_config(
        "archetype = price-discovering-lp-based\ncurve = geometric-mean\ntokens = A, B, C\nreserves = 1, 2, 3\n");
    EXPECT_EQ(std::get<GeometricMean>(gm.curve).weights.size(), 3u);
}

TEST(PoolConfigParse, CommentsAndBlankLines) {
    const PoolConfig c = parse_pool_config(
        "# a pool\n\narchetype = price-discovering-lp-based\n  # indented comment\ncurve = constant-sum\n"
        "tokens = X, Y\nreserves = 5, 5\n");
    EXPECT_TRUE(std::holds_alternative<ConstantSum>(c.curve));
    EXPECT_EQ(c.fee.trade_fee, 0.0);
    const PoolConfig t = parse_pool_config(
        "archetype = price-discovering-lp-based\ncurve = constant-sum  # flat\ntokens = X, Y # pair\nreserves = 5, 5\n");
    EXPECT_EQ(t.tokens, (std::vector<TokenId>{"X", "Y"}));
}

TEST(PoolConfigParse, ErrorsCarryLineNumbers) {
    EXPECT_NE(parse_error_of("archetype = price-discovering-lp-based\ncurve = constant-sum\nbogus = 1\n").find("line 3"),
              std::string::npos);
    EXPECT_NE(parse_error_of("archetype = price-discovering-lp-based\ncurve = constant-sum\nchi = 1\n").find("line 3"),
              std::string::npos);
    EXPECT_NE(parse_error_of("archetype = price-discovering-lp-based\narchetype = price-discovering-lp-based\n")
                  .find("line 2"),
              std::string::npos);
    EXPECT_NE(parse_error_of("archetype = nope\ncurve = constant-sum\n").find("line 1"), std::string::npos);
    EXPECT_NE(parse_error_of("archetype = price-discovering-lp-based\ncurve = constant-sum\ntokens = A, B\n"
                             "reserves = 1, x\n")
                  .find("line 4"),
              std::string::npos);
    EXPECT_NE(parse_error_of("just words\n").find("line 1"), std::string::npos);
    EXPECT_NE(parse_error_of("curve = constant-sum\n").find("archetype"), std::string::npos);
}

TEST(PoolConfigParse, DomainErrorsSurface) {
    try {
        parse_pool_config("archetype = price-discovering-lp-based\ncurve = constant-sum\ntokens = A, B\n"
                          "reserves = 1, 2\nfee = 1.5\n");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::Domain);
    }
}

TEST(PoolConfigLoad, FromFileUsesStemAsName) {
    const auto dir = std::filesystem::temp_directory_path() / "ammlab_pool_config_test";
    std::filesystem::create_directories(dir);
    const auto path = dir / "my-pool.pool";
    {
        std::ofstream f(path);
        f << builtin_pool_text("mstable-2021-like");
    }
    const PoolConfig c = load_pool_config(path.string());
    EXPECT_EQ(c.name, "my-pool");
    EXPECT_EQ(c.tokens.size(), 3u);
    EXPECT_THROW(load_pool_config((dir / "missing.pool").string()), Error);
    EXPECT_EQ(load_pool_config("bancor-like").name, "bancor-like");
    std::filesystem::remove_all(dir);
}
