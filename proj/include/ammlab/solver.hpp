#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "ammlab/error.hpp"

namespace ammlab {

struct RootOptions {
    int max_newton = 64;
    double rel_tol = 1e-12;
    double abs_tol = 0.0;
    int max_bisection = 2000;
};

struct RootResult {
    double x = 0.0;
    int newton_iterations = 0;
    bool bisection_fallback = false;
};

/// Safeguarded Newton on a bracketed monotone root. `f(x)` returns {value, derivative}.
/// Newton steps that leave the bracket are replaced by bisection; after `max_newton`
/// iterations without convergence the solver falls back to plain bisection.
template <typename F>
RootResult solve_bracketed(F&& f, double lo, double hi, double guess, const RootOptions& opt = {}) {
    auto [f_lo, d_lo] = f(lo);
    auto [f_hi, d_hi] = f(hi);
    (void)d_lo;
    (void)d_hi;
    if (f_lo == 0.0) return {lo, 0, false};
    if (f_hi == 0.0) return {hi, 0, false};
    if ((f_lo > 0.0) == (f_hi > 0.0)) {
        throw SolverError("root is not bracketed on [" + std::to_string(lo) + ", " + std::to_string(hi) + "]",
                          std::min(std::abs(f_lo), std::abs(f_hi)));
    }
    const bool lo_positive = f_lo > 0.0;

    auto tolerance = [&](double x) { return std::max(opt.rel_tol * std::abs(x), opt.abs_tol); };
    auto shrink = [&](double x, double fx) {
        if ((fx > 0.0) == lo_positive) {
            lo = x;
        } else {
            hi = x;
        }
    };

    RootResult result;
    double x = (guess > lo && guess < hi) ? guess : 0.5 * (lo + hi);
    for (int it = 0; it < opt.max_newton; ++it) {
        auto [fx, dfx] = f(x);
        result.newton_iterations = it + 1;
        if (fx == 0.0) {
            result.x = x;
            return result;
        }
        shrink(x, fx);
        double next = x - fx / dfx;
        // a converged step can round onto x itself, which is now a bracket end
        if (std::isfinite(next) && std::abs(next - x) <= tolerance(x)) {
            result.x = std::clamp(next, lo, hi);
            return result;
        }
        if (!std::isfinite(next) || next <= lo || next >= hi) next = 0.5 * (lo + hi);
        if (std::abs(next - x) <= tolerance(next) || hi - lo <= tolerance(hi)) {
            result.x = next;
            return result;
        }
        x = next;
    }

    result.bisection_fallback = true;
    for (int it = 0; it < opt.max_bisection; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (hi - lo <= tolerance(mid) || mid == lo || mid == hi) {
            result.x = mid;
            return result;
        }
        auto [fm, dfm] = f(mid);
        (void)dfm;
        if (fm == 0.0) {
            result.x = mid;
            return result;
        }
        shrink(mid, fm);
    }
    throw SolverError("bisection did not converge", std::abs(f(0.5 * (lo + hi)).first));
}

}  // namespace ammlab
