#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

namespace ammlab {

// Pricing rules. Each struct carries only its own parameters; the reserve vector it is
// paired with fixes the number of tokens.

struct ConstantProduct {};

struct GeometricMean {
    std::vector<double> weights;  // w_i > 0, summing to 1
};

struct ConstantSum {};

/// StableSwap-style product-sum rule with leverage `chi`:
///   chi * D^(n-1) * sum(x) + prod(x) = chi * D^n + (D/n)^n
struct ConstantProductSum {
    double chi = 0.0;
};

/// sum(r_i^(1-t)) = const, t in [0, 1).
struct ConstantPowerSum {
    double t = 0.0;
};

/// Logarithmic market scoring rule; reserves are outstanding share quantities q.
/// Collateral is addressed with index q.size() (see `lmsr_collateral_index`).
struct Lmsr {
    double b = 1.0;
};

/// Oracle-priced rule with reserve-imbalance adjustment. Two tokens only; the adopted
/// price is the price of token 0 in units of token 1.
struct PriceAdoption {
    double k = 0.0;
    std::vector<double> target_reserves;
};

/// Bonding curve S^kappa / r = c over reserves {r, S}: index 0 is the bonded reserve
/// token, index 1 the issued token whose circulating supply is S.
struct Exponential {
    double kappa = 1.0;
    double c = 1.0;
};

using CurveSpec = std::variant<ConstantProduct, GeometricMean, ConstantSum, ConstantProductSum,
                               ConstantPowerSum, Lmsr, PriceAdoption, Exponential>;

enum class CurveKind {
    ConstantProduct,
    GeometricMean,
    ConstantSum,
    ConstantProductSum,
    ConstantPowerSum,
    Lmsr,
    PriceAdoption,
    Exponential,
};

CurveKind curve_kind(const CurveSpec& spec);

/// Key used in pool specification files, e.g. "constant-product".
std::string_view curve_key(CurveKind kind);
std::optional<CurveKind> curve_kind_from_key(std::string_view key);

/// True for curves whose pricing preserves a conservation function (not LMSR/oracle/bonding).
bool is_conservation_curve(CurveKind kind);

/// Throws Domain if parameters are out of range or inconsistent with `n` reserves.
void validate_curve(const CurveSpec& spec, std::size_t n);

using Reserves = std::span<const double>;

inline std::size_t lmsr_collateral_index(Reserves q) { return q.size(); }

/// Conservation-function value c at `reserves`. LMSR returns C(q); Exponential S^kappa / r;
/// ConstantProductSum returns D. PriceAdoption has no conservation function (Unsupported).
double invariant_value(const CurveSpec& spec, Reserves reserves);

/// Units of `token_out` per unit of `token_in` at the margin.
double spot_price(const CurveSpec& spec, Reserves reserves, std::size_t token_in, std::size_t token_out,
                  std::optional<double> adopted_price = std::nullopt);

double quote_exact_in(const CurveSpec& spec, Reserves reserves, std::size_t token_in, std::size_t token_out,
                      double dx, std::optional<double> adopted_price = std::nullopt);

double quote_exact_out(const CurveSpec& spec, Reserves reserves, std::size_t token_in, std::size_t token_out,
                       double dy, std::optional<double> adopted_price = std::nullopt);

struct StableswapSolution {
    double d = 0.0;
    int newton_iterations = 0;
    bool bisection_fallback = false;
};

double solve_stableswap_d(Reserves reserves, double chi);
StableswapSolution solve_stableswap_d_detailed(Reserves reserves, double chi);

/// C(q) = b * log(sum(exp(q_j / b))).
double lmsr_cost(double b, Reserves q);
std::vector<double> lmsr_prices(double b, Reserves q);
/// C(q + dq) - C(q); positive means the trader pays collateral.
double lmsr_trade_cost(double b, Reserves q, Reserves dq);

/// Output amount for `dx` of `token_in`, integrating the adjusted marginal price over the
/// input token's reserve trajectory.
double pmm_trade_cost(double k, Reserves target_reserves, Reserves current_reserves, double adopted_price,
                      std::size_t token_in, std::size_t token_out, double dx);

/// |r(S + dS) - r(S)| with r(S) = S^kappa / c.
double bonding_trade(double kappa, double c, double supply, double d_supply);
/// r(S) = S^kappa / c.
double bonding_reserve(double kappa, double c, double supply);

}  // namespace ammlab
