#include "ammlab/curves.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "ammlab/error.hpp"
#include "ammlab/solver.hpp"

namespace ammlab {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

constexpr std::array<std::string_view, 8> kCurveKeys = {
    "constant-product",     "geometric-mean", "constant-sum",  "constant-product-sum",
    "constant-power-sum",   "lmsr",           "price-adoption", "exponential",
};

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_amount(double v, const char* what) {
    require(std::isfinite(v) && v >= 0.0, ErrorCode::Domain,
            std::string(what) + " must be finite and non-negative");
}

void check_pair(std::size_t n, std::size_t in, std::size_t out) {
    require(in < n && out < n, ErrorCode::Domain, "token index out of range");
    require(in != out, ErrorCode::Domain, "token_in and token_out must differ");
}

void check_positive_reserves(Reserves r) {
    for (double x : r) {
        require(std::isfinite(x) && x > 0.0, ErrorCode::Domain, "reserves must be strictly positive");
    }
}

// Change in a conservation function when `din` enters reserve `in` and `dout` leaves
// reserve `out`, with partial derivatives. Formulated as a delta so small trades do not
// lose precision to cancellation.
struct Delta {
    double value;
    double d_in;
    double d_out;
};

struct ConservationDelta {
    CurveKind kind;
    double r_in;
    double r_out;
    double w_in = 1.0;   // geometric-mean weights
    double w_out = 1.0;
    double a = 1.0;      // power-sum exponent 1 - t
    double chi = 0.0;    // product-sum (normalised so that D = 1)
    double prod = 0.0;   // product-sum: prod(x / D)
    double scale = 1.0;  // product-sum: D

    Delta operator()(double din, double dout) const {
        switch (kind) {
            case CurveKind::ConstantProduct:
            case CurveKind::GeometricMean:
                return {w_in * std::log1p(din / r_in) + w_out * std::log1p(-dout / r_out), w_in / (r_in + din),
                        -w_out / (r_out - dout)};
            case CurveKind::ConstantSum:
                return {din - dout, 1.0, -1.0};
            case CurveKind::ConstantPowerSum: {
                const double t = 1.0 - a;
                const double v = std::pow(r_in, a) * std::expm1(a * std::log1p(din / r_in)) +
                                 std::pow(r_out, a) * std::expm1(a * std::log1p(-dout / r_out));
                return {v, a * std::pow(r_in + din, -t), -a * std::pow(r_out - dout, -t)};
            }
            case CurveKind::ConstantProductSum: {
                const double xi = r_in / scale, xo = r_out / scale;
                const double di = din / scale, dov = dout / scale;
                const double lg = std::log1p(di / xi) + std::log1p(-dov / xo);
                const double prod_after = prod * std::exp(lg);
                const double v = chi * (di - dov) + prod * std::expm1(lg);
                return {v, (chi + prod_after / (xi + di)) / scale, -(chi + prod_after / (xo - dov)) / scale};
            }
            default:
                fail(ErrorCode::Unsupported, "not a conservation curve");
        }
    }
};

ConservationDelta make_delta(const CurveSpec& spec, Reserves r, std::size_t in, std::size_t out) {
    ConservationDelta d{curve_kind(spec), r[in], r[out]};
    std::visit(overloaded{
                   [&](const GeometricMean& g) {
                       d.w_in = g.weights[in];
                       d.w_out = g.weights[out];
                   },
                   [&](const ConstantPowerSum& p) { d.a = 1.0 - p.t; },
                   [&](const ConstantProductSum& p) {
                       d.scale = solve_stableswap_d(r, p.chi);
                       d.chi = p.chi;
                       double prod = 1.0;
                       for (double x : r) prod *= x / d.scale;
                       d.prod = prod;
                   },
                   [](const auto&) {},
               },
               spec);
    return d;
}

double conservation_quote_in(const CurveSpec& spec, Reserves r, std::size_t in, std::size_t out, double dx) {
    const ConservationDelta delta = make_delta(spec, r, in, out);
    const double r_out = r[out];
    const Delta at_full = delta(dx, r_out);
    if (at_full.value > 0.0) {
        fail(ErrorCode::Depleted, "output would exceed the available reserve");
    }
    if (at_full.value == 0.0) return r_out;
    auto f = [&](double dout) {
        const Delta d = delta(dx, dout);
        return std::pair{d.value, d.d_out};
    };
    const double guess = std::min(spot_price(spec, r, in, out) * dx, 0.5 * r_out);
    return solve_bracketed(f, 0.0, r_out, guess).x;
}

double conservation_quote_out(const CurveSpec& spec, Reserves r, std::size_t in, std::size_t out, double dy) {
    require(dy < r[out], ErrorCode::Depleted, "requested output must be below the available reserve");
    const ConservationDelta delta = make_delta(spec, r, in, out);
    auto f = [&](double din) {
        const Delta d = delta(din, dy);
        return std::pair{d.value, d.d_in};
    };
    const double guess = dy / spot_price(spec, r, in, out);
    double hi = std::max(2.0 * guess, std::numeric_limits<double>::min());
    int expansions = 0;
    while (f(hi).first <= 0.0) {
        hi *= 2.0;
        require(++expansions < 2000 && std::isfinite(hi), ErrorCode::Depleted,
                "no finite input produces the requested output");
    }
    return solve_bracketed(f, 0.0, hi, guess).x;
}

// Finds the smallest doubling of `start` at which `increasing(x) > 0`.
template <typename F>
double expand_upper(F&& increasing, double start) {
    double hi = std::max(start, std::numeric_limits<double>::min());
    for (int i = 0; i < 2000; ++i) {
        if (increasing(hi).first > 0.0) return hi;
        hi *= 2.0;
    }
    throw SolverError("could not bracket root", increasing(hi).first);
}

// ---- LMSR ---------------------------------------------------------------------------

double lmsr_quote_in(double b, Reserves q, std::size_t in, std::size_t out, double dx) {
    const std::size_t n = q.size();
    std::vector<double> dq(n, 0.0);
    if (in == n) {
        // collateral -> shares of `out`
        auto f = [&](double s) {
            dq[out] = s;
            std::vector<double> moved(q.begin(), q.end());
            moved[out] += s;
            return std::pair{lmsr_trade_cost(b, q, dq) - dx, lmsr_prices(b, moved)[out]};
        };
        const double hi = expand_upper(f, dx);
        return solve_bracketed(f, 0.0, hi, dx / lmsr_prices(b, q)[out]).x;
    }
    require(dx <= q[in], ErrorCode::Domain, "cannot sell more shares than are outstanding");
    if (out == n) {
        dq[in] = -dx;
        return -lmsr_trade_cost(b, q, dq);
    }
    // shares of `in` -> shares of `out` at zero net collateral
    auto f = [&](double t) {
        dq[in] = -dx;
        dq[out] = t;
        std::vector<double> moved(q.begin(), q.end());
        moved[in] -= dx;
        moved[out] += t;
        return std::pair{lmsr_trade_cost(b, q, dq), lmsr_prices(b, moved)[out]};
    };
    const double hi = expand_upper(f, dx);
    const auto p = lmsr_prices(b, q);
    return solve_bracketed(f, 0.0, hi, dx * p[in] / p[out]).x;
}

double lmsr_quote_out(double b, Reserves q, std::size_t in, std::size_t out, double dy) {
    const std::size_t n = q.size();
    std::vector<double> dq(n, 0.0);
    if (in == n) {
        dq[out] = dy;
        return lmsr_trade_cost(b, q, dq);
    }
    // Selling at most q[in] shares of `in`.
    auto residual_at = [&](double s) {
        std::fill(dq.begin(), dq.end(), 0.0);
        dq[in] = -s;
        if (out == n) return -lmsr_trade_cost(b, q, dq) - dy;  // collateral received minus target
        dq[out] = dy;
        return -lmsr_trade_cost(b, q, dq);                      // net collateral released
    };
    require(residual_at(q[in]) >= 0.0, ErrorCode::Depleted,
            "outstanding shares cannot fund the requested output");
    auto f = [&](double s) {
        std::vector<double> moved(q.begin(), q.end());
        moved[in] -= s;
        if (out != n) moved[out] += dy;
        return std::pair{residual_at(s), lmsr_prices(b, moved)[in]};
    };
    return solve_bracketed(f, 0.0, q[in], 0.5 * q[in]).x;
}

double lmsr_spot(double b, Reserves q, std::size_t in, std::size_t out) {
    const auto p = lmsr_prices(b, q);
    const std::size_t n = q.size();
    if (out == n) return p[in];
    if (in == n) return 1.0 / p[out];
    return p[in] / p[out];
}

// ---- price adoption -----------------------------------------------------------------

double adopted_rate(double adopted, std::size_t in) { return in == 0 ? adopted : 1.0 / adopted; }

double require_adopted(std::optional<double> adopted) {
    if (!adopted) fail(ErrorCode::MissingOracle, "price-adoption curve needs an adopted price");
    require(std::isfinite(*adopted) && *adopted > 0.0, ErrorCode::Domain, "adopted price must be positive");
    return *adopted;
}

double pmm_quote_out(const PriceAdoption& pa, Reserves r, double adopted, std::size_t in, std::size_t out,
                     double dy) {
    require(dy < r[out], ErrorCode::Depleted, "requested output must be below the available reserve");
    // rate * (dx * a - k dx^2 / (2T)) = dy, with a = 1 + k (T - r_in) / T.
    const double target = pa.target_reserves[in];
    const double a = 1.0 + pa.k * (target - r[in]) / target;
    const double c = dy / adopted_rate(adopted, in);
    const double quad = pa.k / (2.0 * target);
    const double disc = a * a - 4.0 * quad * c;
    require(a > 0.0 && disc >= 0.0, ErrorCode::Domain, "adjusted price cannot supply the requested output");
    const double dx = 2.0 * c / (a + std::sqrt(disc));
    return dx;
}

// ---- bonding curve --------------------------------------------------------------------

double bonding_price(const Exponential& e, double supply) {
    return e.kappa * std::pow(supply, e.kappa - 1.0) / e.c;
}

// Trades are priced from the current (r, S) pair rather than from c, so the ratio
// S^kappa / r carried by the state is preserved and rounding cannot make r and S drift apart.
// On a consistent state both forms agree with bonding_trade.
double bonding_mint_for(const Exponential& e, double reserve, double supply, double reserve_in) {
    if (supply == 0.0 || reserve == 0.0) return std::pow(e.c * (reserve + reserve_in), 1.0 / e.kappa) - supply;
    return supply * std::expm1(std::log1p(reserve_in / reserve) / e.kappa);
}

double bonding_cost_of(const Exponential& e, double reserve, double supply, double minted) {
    if (supply == 0.0 || reserve == 0.0) return bonding_trade(e.kappa, e.c, supply, minted);
    return reserve * std::expm1(e.kappa * std::log1p(minted / supply));
}

double bonding_payout_for(const Exponential& e, double reserve, double supply, double burned) {
    return -reserve * std::expm1(e.kappa * std::log1p(-burned / supply));
}

double bonding_burn_for(const Exponential& e, double reserve, double supply, double payout) {
    return -supply * std::expm1(std::log1p(-payout / reserve) / e.kappa);
}

}  // namespace

CurveKind curve_kind(const CurveSpec& spec) { return static_cast<CurveKind>(spec.index()); }

std::string_view curve_key(CurveKind kind) { return kCurveKeys[static_cast<std::size_t>(kind)]; }

std::optional<CurveKind> curve_kind_from_key(std::string_view key) {
    for (std::size_t i = 0; i < kCurveKeys.size(); ++i) {
        if (kCurveKeys[i] == key) return static_cast<CurveKind>(i);
    }
    return std::nullopt;
}

bool is_conservation_curve(CurveKind kind) {
    switch (kind) {
        case CurveKind::ConstantProduct:
        case CurveKind::GeometricMean:
        case CurveKind::ConstantSum:
        case CurveKind::ConstantProductSum:
        case CurveKind::ConstantPowerSum:
            return true;
        default:
            return false;
    }
}

void validate_curve(const CurveSpec& spec, std::size_t n) {
    std::visit(overloaded{
                   [&](const ConstantProduct&) { require(n >= 2, ErrorCode::Domain, "need at least two tokens"); },
                   [&](const ConstantSum&) { require(n >= 2, ErrorCode::Domain, "need at least two tokens"); },
                   [&](const GeometricMean& g) {
                       require(n >= 2, ErrorCode::Domain, "need at least two tokens");
                       require(g.weights.size() == n, ErrorCode::Domain, "weight count must equal token count");
                       double sum = 0.0;
                       for (double w : g.weights) {
                           require(std::isfinite(w) && w > 0.0, ErrorCode::Domain, "weights must be positive");
                           sum += w;
                       }
                       require(std::abs(sum - 1.0) <= 1e-9, ErrorCode::Domain, "weights must sum to 1");
                   },
                   [&](const ConstantProductSum& p) {
                       require(n >= 2, ErrorCode::Domain, "need at least two tokens");
                       require(std::isfinite(p.chi) && p.chi >= 0.0, ErrorCode::Domain, "chi must be >= 0");
                   },
                   [&](const ConstantPowerSum& p) {
                       require(n >= 2, ErrorCode::Domain, "need at least two tokens");
                       require(std::isfinite(p.t) && p.t >= 0.0 && p.t < 1.0, ErrorCode::Domain,
                               "t must lie in [0, 1)");
                   },
                   [&](const Lmsr& l) {
                       require(n >= 2, ErrorCode::Domain, "need at least two outcomes");
                       require(std::isfinite(l.b) && l.b > 0.0, ErrorCode::Domain, "b must be positive");
                   },
                   [&](const PriceAdoption& p) {
                       require(n == 2, ErrorCode::Domain, "price adoption supports exactly two tokens");
                       require(std::isfinite(p.k) && p.k >= 0.0 && p.k <= 1.0, ErrorCode::Domain,
                               "k must lie in [0, 1]");
                       require(p.target_reserves.size() == n, ErrorCode::Domain,
                               "target reserve count must equal token count");
                       for (double t : p.target_reserves) {
                           require(std::isfinite(t) && t > 0.0, ErrorCode::Domain,
                                   "target reserves must be positive");
                       }
                   },
                   [&](const Exponential& e) {
                       require(n == 2, ErrorCode::Domain, "bonding curve takes {reserve, supply}");
                       require(std::isfinite(e.kappa) && e.kappa > 0.0, ErrorCode::Domain, "kappa must be positive");
                       require(std::isfinite(e.c) && e.c > 0.0, ErrorCode::Domain, "c must be positive");
                   },
               },
               spec);
}

double invariant_value(const CurveSpec& spec, Reserves r) {
    return std::visit(
        overloaded{
            [&](const ConstantProduct&) {
                check_positive_reserves(r);
                return std::accumulate(r.begin(), r.end(), 1.0, std::multiplies<>());
            },
            [&](const GeometricMean& g) {
                check_positive_reserves(r);
                validate_curve(spec, r.size());
                double log_sum = 0.0;
                for (std::size_t i = 0; i < r.size(); ++i) log_sum += g.weights[i] * std::log(r[i]);
                return std::exp(log_sum);
            },
            [&](const ConstantSum&) {
                for (double x : r) check_amount(x, "reserve");
                return std::accumulate(r.begin(), r.end(), 0.0);
            },
            [&](const ConstantProductSum& p) { return solve_stableswap_d(r, p.chi); },
            [&](const ConstantPowerSum& p) {
                for (double x : r) check_amount(x, "reserve");
                double sum = 0.0;
                for (double x : r) sum += std::pow(x, 1.0 - p.t);
                return sum;
            },
            [&](const Lmsr& l) { return lmsr_cost(l.b, r); },
            [&](const PriceAdoption&) -> double {
                fail(ErrorCode::Unsupported, "price adoption has no conservation function");
            },
            [&](const Exponential& e) {
                require(r.size() == 2, ErrorCode::Domain, "bonding curve takes {reserve, supply}");
                require(r[0] > 0.0, ErrorCode::Domain, "bonded reserve must be positive");
                check_amount(r[1], "supply");
                return std::pow(r[1], e.kappa) / r[0];
            },
        },
        spec);
}

double spot_price(const CurveSpec& spec, Reserves r, std::size_t in, std::size_t out,
                  std::optional<double> adopted) {
    const std::size_t n = std::holds_alternative<Lmsr>(spec) ? r.size() + 1 : r.size();
    check_pair(n, in, out);
    return std::visit(
        overloaded{
            [&](const ConstantProduct&) {
                check_positive_reserves(r);
                return r[out] / r[in];
            },
            [&](const GeometricMean& g) {
                check_positive_reserves(r);
                return (g.weights[in] * r[out]) / (g.weights[out] * r[in]);
            },
            [&](const ConstantSum&) { return 1.0; },
            [&](const ConstantProductSum& p) {
                check_positive_reserves(r);
                const double d = solve_stableswap_d(r, p.chi);
                double prod = 1.0;
                for (double x : r) prod *= x / d;
                const double xi = r[in] / d, xo = r[out] / d;
                return (p.chi + prod / xi) / (p.chi + prod / xo);
            },
            [&](const ConstantPowerSum& p) {
                check_positive_reserves(r);
                return std::pow(r[out] / r[in], p.t);
            },
            [&](const Lmsr& l) { return lmsr_spot(l.b, r, in, out); },
            [&](const PriceAdoption& pa) {
                const double price = require_adopted(adopted);
                const double target = pa.target_reserves[in];
                return adopted_rate(price, in) * (1.0 + pa.k * (target - r[in]) / target);
            },
            [&](const Exponential& e) {
                const double price = r[0] > 0.0 && r[1] > 0.0 ? e.kappa * r[0] / r[1] : bonding_price(e, r[1]);
                return in == 1 ? price : 1.0 / price;
            },
        },
        spec);
}

double quote_exact_in(const CurveSpec& spec, Reserves r, std::size_t in, std::size_t out, double dx,
                      std::optional<double> adopted) {
    const std::size_t n = std::holds_alternative<Lmsr>(spec) ? r.size() + 1 : r.size();
    check_pair(n, in, out);
    check_amount(dx, "input amount");
    if (dx == 0.0) return 0.0;
    return std::visit(
        overloaded{
            [&](const Lmsr& l) { return lmsr_quote_in(l.b, r, in, out, dx); },
            [&](const PriceAdoption& pa) {
                return pmm_trade_cost(pa.k, pa.target_reserves, r, require_adopted(adopted), in, out, dx);
            },
            [&](const Exponential& e) {
                if (in == 0) return bonding_mint_for(e, r[0], r[1], dx);
                require(dx <= r[1], ErrorCode::Domain, "cannot burn more than the circulating supply");
                return bonding_payout_for(e, r[0], r[1], dx);
            },
            [&](const auto&) {
                check_positive_reserves(r);
                return conservation_quote_in(spec, r, in, out, dx);
            },
        },
        spec);
}

double quote_exact_out(const CurveSpec& spec, Reserves r, std::size_t in, std::size_t out, double dy,
                       std::optional<double> adopted) {
    const std::size_t n = std::holds_alternative<Lmsr>(spec) ? r.size() + 1 : r.size();
    check_pair(n, in, out);
    check_amount(dy, "output amount");
    if (dy == 0.0) return 0.0;
    return std::visit(
        overloaded{
            [&](const Lmsr& l) { return lmsr_quote_out(l.b, r, in, out, dy); },
            [&](const PriceAdoption& pa) { return pmm_quote_out(pa, r, require_adopted(adopted), in, out, dy); },
            [&](const Exponential& e) {
                if (in == 0) return bonding_cost_of(e, r[0], r[1], dy);
                require(dy <= r[0], ErrorCode::Depleted, "requested payout exceeds the bonded reserve");
                return bonding_burn_for(e, r[0], r[1], dy);
            },
            [&](const ConstantSum&) {
                require(dy < r[out], ErrorCode::Depleted, "requested output must be below the available reserve");
                return conservation_quote_out(spec, r, in, out, dy);
            },
            [&](const auto&) {
                check_positive_reserves(r);
                return conservation_quote_out(spec, r, in, out, dy);
            },
        },
        spec);
}

StableswapSolution solve_stableswap_d_detailed(Reserves r, double chi) {
    check_positive_reserves(r);
    require(r.size() >= 2, ErrorCode::Domain, "need at least two reserves");
    require(std::isfinite(chi) && chi >= 0.0, ErrorCode::Domain, "chi must be >= 0");

    // The invariant is homogeneous of degree n, so solve for D / sum(x) on (0, 1].
    const double sum = std::accumulate(r.begin(), r.end(), 0.0);
    const double n = static_cast<double>(r.size());
    double prod = 1.0;
    for (double x : r) prod *= x / sum;

    auto f = [&](double d) {
        const double d_n1 = std::pow(d, n - 1.0);
        const double value = chi * d_n1 * (d - 1.0) + std::pow(d / n, n) - prod;
        const double slope = chi * ((n - 1.0) * std::pow(d, n - 2.0) * (d - 1.0) + d_n1) + d_n1 / std::pow(n, n - 1.0);
        return std::pair{value, slope};
    };
    // f(1) = n^-n - prod >= 0 by AM-GM; at or past zero the reserves are balanced and D = sum.
    if (f(1.0).first <= 0.0) return {sum, 0, false};
    const RootResult root = solve_bracketed(f, 0.0, 1.0, 1.0 - 1e-15);
    return {root.x * sum, root.newton_iterations, root.bisection_fallback};
}

double solve_stableswap_d(Reserves r, double chi) { return solve_stableswap_d_detailed(r, chi).d; }

double lmsr_cost(double b, Reserves q) {
    require(std::isfinite(b) && b > 0.0, ErrorCode::Domain, "b must be positive");
    require(!q.empty(), ErrorCode::Domain, "need at least one outcome");
    const double m = *std::max_element(q.begin(), q.end());
    double sum = 0.0;
    for (double x : q) sum += std::exp((x - m) / b);
    return m + b * std::log(sum);
}

std::vector<double> lmsr_prices(double b, Reserves q) {
    require(std::isfinite(b) && b > 0.0, ErrorCode::Domain, "b must be positive");
    const double m = *std::max_element(q.begin(), q.end());
    std::vector<double> p(q.size());
    double sum = 0.0;
    for (std::size_t i = 0; i < q.size(); ++i) {
        p[i] = std::exp((q[i] - m) / b);
        sum += p[i];
    }
    for (double& x : p) x /= sum;
    return p;
}

double lmsr_trade_cost(double b, Reserves q, Reserves dq) {
    require(std::isfinite(b) && b > 0.0, ErrorCode::Domain, "b must be positive");
    require(q.size() == dq.size(), ErrorCode::Domain, "q and dq must have equal length");
    bool small = true;
    for (std::size_t i = 0; i < q.size(); ++i) {
        require(std::isfinite(dq[i]) && q[i] + dq[i] >= 0.0, ErrorCode::Domain,
                "share quantities must stay non-negative");
        small = small && std::abs(dq[i] / b) < 700.0;
    }
    if (small) {
        // b * log(sum p_i exp(dq_i / b)), written to keep precision for small trades.
        const auto p = lmsr_prices(b, q);
        double acc = 0.0;
        for (std::size_t i = 0; i < q.size(); ++i) acc += p[i] * std::expm1(dq[i] / b);
        return b * std::log1p(acc);
    }
    std::vector<double> moved(q.begin(), q.end());
    for (std::size_t i = 0; i < q.size(); ++i) moved[i] += dq[i];
    return lmsr_cost(b, moved) - lmsr_cost(b, q);
}

double pmm_trade_cost(double k, Reserves target, Reserves current, double adopted, std::size_t in,
                      std::size_t out, double dx) {
    check_pair(current.size(), in, out);
    require(target.size() == current.size(), ErrorCode::Domain, "target and current reserves differ in length");
    require(std::isfinite(adopted) && adopted > 0.0, ErrorCode::Domain, "adopted price must be positive");
    require(k >= 0.0 && k <= 1.0, ErrorCode::Domain, "k must lie in [0, 1]");
    check_amount(dx, "input amount");
    if (dx == 0.0) return 0.0;
    const double t = target[in];
    const double r = current[in];
    require(1.0 + k * (t - r - dx) / t >= 0.0, ErrorCode::Domain, "trade would push the adjusted price below zero");
    const double dy = adopted_rate(adopted, in) * (dx + k * (dx * (t - r) - 0.5 * dx * dx) / t);
    require(dy <= current[out], ErrorCode::Depleted, "output would exceed the available reserve");
    return dy;
}

double bonding_reserve(double kappa, double c, double supply) {
    check_amount(supply, "supply");
    return std::pow(supply, kappa) / c;
}

double bonding_trade(double kappa, double c, double supply, double d_supply) {
    require(std::isfinite(kappa) && kappa > 0.0 && std::isfinite(c) && c > 0.0, ErrorCode::Domain,
            "kappa and c must be positive");
    check_amount(supply, "supply");
    require(std::isfinite(d_supply) && supply + d_supply >= 0.0, ErrorCode::Domain,
            "cannot burn below zero supply");
    const double lo = std::min(supply, supply + d_supply);
    const double hi = std::max(supply, supply + d_supply);
    if (hi == lo) return 0.0;
    if (lo == 0.0) return std::pow(hi, kappa) / c;
    return std::pow(lo, kappa) * std::expm1(kappa * std::log1p((hi - lo) / lo)) / c;
}

}  // namespace ammlab
