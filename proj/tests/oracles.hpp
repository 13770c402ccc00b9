#pragma once

// Independent reference computations for the tests. Nothing here calls into the library's
// pricing code: closed forms where they exist, plain bisection or quadrature elsewhere.

#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using ld = long double;

/// Seeded generator for property tests.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : eng_(seed * 0x9e3779b97f4a7c15ULL + 1) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(eng_); }
    double log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng_); }
    bool coin() { return integer(0, 1) == 1; }
    std::vector<double> reserves(std::size_t n, double lo = 1e2, double hi = 1e7) {
        std::vector<double> r(n);
        for (auto& x : r) x = log_uniform(lo, hi);
        return r;
    }

private:
    std::mt19937_64 eng_;
};

inline ld bisect(const std::function<ld(ld)>& f, ld lo, ld hi, int iters = 200) {
    ld flo = f(lo);
    for (int i = 0; i < iters; ++i) {
        const ld mid = lo + (hi - lo) / 2;
        const ld fm = f(mid);
        if ((fm < 0) == (flo < 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return lo + (hi - lo) / 2;
}

inline double cp_out(double x, double y, double dx) { return static_cast<double>((ld)y * dx / ((ld)x + dx)); }
inline double cp_in(double x, double y, double dy) { return static_cast<double>((ld)x * dy / ((ld)y - dy)); }

/// Weighted geometric mean x^wx y^wy = const.
inline double gm_out(double x, double y, double wx, double wy, double dx) {
    return static_cast<double>((ld)y * (1 - std::pow((ld)x / ((ld)x + dx), (ld)wx / wy)));
}

/// x^(1-t) + y^(1-t) = const.
/// NaN when the trade would drain y.
inline double power_sum_out(double x, double y, double t, double dx) {
    const ld e = 1 - (ld)t;
    // y_new^e = y^e (1 + u) with u = -(x/y)^e ((1 + dx/x)^e - 1), kept free of cancellation
    const ld u = -std::pow((ld)x / y, e) * std::expm1(e * std::log1p((ld)dx / x));
    if (u <= -1) return NAN;
    return static_cast<double>(-(ld)y * std::expm1(std::log1p(u) / e));
}

inline ld product_sum_residual(const std::vector<ld>& x, ld chi, ld d) {
    const ld n = static_cast<ld>(x.size());
    ld sum = 0;
    ld prod = 1;
    for (ld v : x) {
        sum += v;
        prod *= v;
    }
    return chi * std::pow(d, n - 1) * sum + prod - chi * std::pow(d, n) - std::pow(d / n, n);
}

/// D from chi D^(n-1) sum + prod = chi D^n + (D/n)^n by bisection on (0, sum].
inline double stableswap_d(const std::vector<double>& r, double chi) {
    std::vector<ld> x(r.begin(), r.end());
    const ld sum = std::accumulate(x.begin(), x.end(), (ld)0);
    return static_cast<double>(bisect([&](ld d) { return product_sum_residual(x, chi, d); }, 0, sum, 400));
}

/// Exact-in quote on the product-sum invariant holding D fixed; NaN when the trade would drain j.
inline double product_sum_out(std::vector<double> r, double chi, std::size_t i, std::size_t j, double dx) {
    const ld d = stableswap_d(r, chi);
    std::vector<ld> x(r.begin(), r.end());
    x[i] += dx;
    const ld y0 = x[j];
    auto residual = [&](ld y) {
        auto z = x;
        z[j] = y;
        return product_sum_residual(z, chi, d);
    };
    if ((residual(0) < 0) == (residual(y0) < 0)) return NAN;  // no root left in (0, y0]: drained
    const ld y1 = bisect(residual, 0, y0, 400);
    return static_cast<double>(y0 - y1);
}

inline ld lmsr_cost(double b, const std::vector<double>& q) {
    ld m = q[0];
    for (double v : q) m = std::max<ld>(m, v);
    ld s = 0;
    for (double v : q) s += std::exp(((ld)v - m) / b);
    return m + (ld)b * std::log(s);
}

/// Shares of outcome `i` bought for `collateral`, by bisection on the cost difference.
inline double lmsr_shares_for(double b, const std::vector<double>& q, std::size_t i, double collateral) {
    const ld base = lmsr_cost(b, q);
    return static_cast<double>(bisect(
        [&](ld s) {
            auto moved = q;
            moved[i] += static_cast<double>(s);
            return lmsr_cost(b, moved) - base - collateral;
        },
        0, collateral * 1e6 + b * 100, 300));
}

/// Integrates the adjusted marginal price p * (1 + k (T - r) / T) along the input reserve.
inline double pmm_out(double k, double target, double r_in, double rate, double dx) {
    const int n = 2000;
    const ld h = (ld)dx / n;
    auto price = [&](ld r) { return (ld)rate * (1 + (ld)k * ((ld)target - r) / target); };
    ld s = price(r_in) + price(r_in + dx);
    for (int m = 1; m < n; ++m) s += price(r_in + m * h) * (m % 2 ? 4 : 2);
    return static_cast<double>(s * h / 3);
}

/// Reserve backing supply S on S^kappa / r = c.
inline double bonding_reserve(double kappa, double c, double s) { return std::pow(s, kappa) / c; }

/// Supply reached by bonding `reserve` from zero supply.
inline double bonding_supply(double kappa, double c, double reserve) { return std::pow(c * reserve, 1 / kappa); }

/// Constant-product reserves after arbitrage to price p (token 0 in token 1) with zero fee.
inline std::pair<double, double> cp_arbitraged(double k, double p) { return {std::sqrt(k / p), std::sqrt(k * p)}; }

/// LP value over hold value minus one after the price moves by `ratio`.
inline double cp_divergence_loss(double ratio) { return 2 * std::sqrt(ratio) / (1 + ratio) - 1; }

/// Largest value of f over a uniform grid on [0, hi].
inline double grid_max(const std::function<double(double)>& f, double hi, int points) {
    double best = -INFINITY;
    for (int i = 0; i <= points; ++i) best = std::max(best, f(hi * i / points));
    return best;
}

}  // namespace oracle
