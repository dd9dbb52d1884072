#pragma once

// Gauss-Legendre rules and a small adaptive composite integrator.
//
// The integrator is deliberately simple: it bisects every panel uniformly
// and stops when two successive refinements agree to the caller's tolerance
// (a Richardson-style convergence test). Integrand smoothness is the
// caller's responsibility; the focusing modules substitute variables first
// so their pupil integrands are smooth here.

#include <cmath>
#include <cstddef>
#include <type_traits>
#include <utility>
#include <vector>

#include "core.hpp"

namespace dipscat {

struct QuadratureRule {
    std::vector<double> nodes;    // on [-1, 1], strictly increasing, symmetric
    std::vector<double> weights;  // positive, sum to 2
};

// Gauss-Legendre rule of the given order (number of nodes), order in [2, 4096].
// Nodes are Newton-refined roots of P_n; weights w_i = 2 / ((1 - x_i^2) P_n'(x_i)^2).
inline QuadratureRule gauss_legendre(int order) {
    if (order < 2 || order > 4096) {
        throw std::invalid_argument("gauss_legendre: order must be in [2, 4096]");
    }
    const std::size_t n = static_cast<std::size_t>(order);
    QuadratureRule rule;
    rule.nodes.assign(n, 0.0);
    rule.weights.assign(n, 0.0);

    const std::size_t half = (n + 1) / 2;
    for (std::size_t i = 0; i < half; ++i) {
        // Tricomi-style initial guess, then Newton on P_n.
        double x = std::cos(constants::pi * (static_cast<double>(i) + 0.75) /
                            (static_cast<double>(n) + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0;
            double p1 = x;
            for (std::size_t j = 2; j <= n; ++j) {
                const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / static_cast<double>(j);
                p0 = p1;
                p1 = p2;
            }
            dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) {
                // one more Newton step polishes to machine precision
                double q0 = 1.0;
                double q1 = x;
                for (std::size_t j = 2; j <= n; ++j) {
                    const double q2 = ((2.0 * j - 1.0) * x * q1 - (j - 1.0) * q0) / static_cast<double>(j);
                    q0 = q1;
                    q1 = q2;
                }
                dp = static_cast<double>(n) * (x * q1 - q0) / (x * x - 1.0);
                x -= q1 / dp;
                break;
            }
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        // mirror so the rule is exactly symmetric
        rule.nodes[i] = -x;
        rule.weights[i] = w;
        rule.nodes[n - 1 - i] = x;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) {
        rule.nodes[n / 2] = 0.0;
    }
    return rule;
}

struct IntegrateOptions {
    double rel_tol = 1e-10;
    double abs_tol = 0.0;        // absolute floor for near-zero integrals
    int max_refinements = 20;    // panel count caps at initial_panels * 2^max
    int initial_panels = 1;
};

namespace detail {

template <class F>
auto composite_pass(F& f, double a, double b, const QuadratureRule& rule, int panels)
    -> std::decay_t<decltype(f(a))> {
    using R = std::decay_t<decltype(f(a))>;
    const double h = (b - a) / panels;
    R total = R{};
    for (int p = 0; p < panels; ++p) {
        const double lo = a + p * h;
        const double mid = lo + 0.5 * h;
        R panel_sum = R{};
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            panel_sum = panel_sum + rule.weights[i] * f(mid + 0.5 * h * rule.nodes[i]);
        }
        total = total + (0.5 * h) * panel_sum;
    }
    return total;
}

}  // namespace detail

// Adaptive composite integration of f over [a, b] with the given base rule.
// Works for any value type supporting +, scalar*, and integ_norm (double,
// Complex, CVec3). Throws accuracy_error when the refinement budget is
// exhausted before two passes agree.
template <class F>
auto integrate_1d(F&& f, double a, double b, const QuadratureRule& rule,
                  IntegrateOptions opt = {}) -> std::decay_t<decltype(f(a))> {
    using R = std::decay_t<decltype(f(a))>;
    if (!(std::isfinite(a) && std::isfinite(b))) {
        throw std::invalid_argument("integrate_1d: non-finite interval");
    }
    if (a == b) {
        return R{};
    }
    int panels = opt.initial_panels < 1 ? 1 : opt.initial_panels;
    R prev = detail::composite_pass(f, a, b, rule, panels);
    double gap = 0.0;
    for (int level = 0; level < opt.max_refinements; ++level) {
        panels *= 2;
        const R cur = detail::composite_pass(f, a, b, rule, panels);
        gap = integ_norm(cur - prev);
        const double scale = integ_norm(cur);
        if (gap <= std::max(opt.abs_tol, opt.rel_tol * scale)) {
            return cur;
        }
        prev = cur;
    }
    throw accuracy_error("integrate_1d: refinement budget exhausted", integ_norm(prev), gap);
}

// Periodic trapezoidal rule over one full period [0, 2*pi): spectrally exact
// for trigonometric polynomials of degree < n/2, which covers every azimuthal
// factor appearing in the pupil integrands here.
template <class F>
auto integrate_periodic(F&& f, int n = 32) -> std::decay_t<decltype(f(0.0))> {
    using R = std::decay_t<decltype(f(0.0))>;
    R total = R{};
    const double h = 2.0 * constants::pi / n;
    for (int j = 0; j < n; ++j) {
        total = total + h * f(j * h);
    }
    return total;
}

}  // namespace dipscat
