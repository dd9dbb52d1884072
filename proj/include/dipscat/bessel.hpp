#pragma once

// Bessel functions J0, J1, J2 of a real non-negative argument.
//
// Two regimes, both evaluated in long double so the hand-off meets a
// 1e-12 absolute error contract across the whole working range (x <= 200,
// still accurate well beyond):
//   x < 17  : ascending power series. The series alternates with terms up
//             to ~e^x, so extended precision is what keeps the cancellation
//             harmless this far out.
//   x >= 17 : Hankel asymptotic expansion with optimally truncated P/Q
//             sums; its floor ~e^{-2x} is far below 1e-12 from x ~ 16 on.
// J2 uses the upward recurrence J2 = (2/x) J1 - J0 in the asymptotic regime
// (stable for order < argument).

#include <cmath>
#include <stdexcept>

#include "core.hpp"

namespace dipscat {

namespace detail {

inline long double bessel_series(int n, long double x) {
    // sum_m (-1)^m (x/2)^{n+2m} / (m! (n+m)!)
    const long double q = 0.25L * x * x;
    long double term = 1.0L;
    for (int j = 1; j <= n; ++j) {
        term *= 0.5L * x / j;
    }
    long double sum = term;
    for (int m = 1; m < 400; ++m) {
        term *= -q / (static_cast<long double>(m) * (m + n));
        sum += term;
        if (std::abs(term) < 1e-22L * (std::abs(sum) + 1e-30L)) {
            break;
        }
    }
    return sum;
}

// P and Q factors of the Hankel expansion for order n, truncated at the
// smallest term.
inline void bessel_pq(int n, long double x, long double& p, long double& q) {
    const long double mu = 4.0L * n * n;
    const long double inv8x = 1.0L / (8.0L * x);
    p = 1.0L;
    q = 0.0L;
    long double term = 1.0L;  // running product of (mu - odd^2)/(k * 8x) factors
    long double prev_mag = 1e30L;
    for (int k = 1; k < 40; ++k) {
        const long double odd = 2.0L * k - 1.0L;
        term *= (mu - odd * odd) * inv8x / k;
        const long double mag = std::abs(term);
        if (mag >= prev_mag) {
            break;  // asymptotic series started diverging; stop at smallest term
        }
        prev_mag = mag;
        // k odd feeds Q, k even feeds P; the (-1)^k of the expansion works
        // out to + for k mod 4 in {0,1} and - for k mod 4 in {2,3}
        const int m = k % 4;
        const long double sgn = (m == 0 || m == 1) ? 1.0L : -1.0L;
        if (k % 2 == 1) {
            q += sgn * term;
        } else {
            p += sgn * term;
        }
        if (mag < 1e-22L) {
            break;
        }
    }
}

inline long double bessel_asymptotic(int n, long double x) {
    long double p = 0.0L;
    long double q = 0.0L;
    bessel_pq(n, x, p, q);
    const long double chi = x - (0.5L * n + 0.25L) * 3.141592653589793238462643383279502884L;
    return std::sqrt(2.0L / (3.141592653589793238462643383279502884L * x)) *
           (p * std::cos(chi) - q * std::sin(chi));
}

}  // namespace detail

// J_n(x) for n in {0, 1, 2} and finite x >= 0.
inline double bessel_j(int n, double x) {
    if (n < 0 || n > 2) {
        throw std::domain_error("bessel_j: order must be 0, 1 or 2");
    }
    if (!std::isfinite(x) || x < 0.0) {
        throw std::domain_error("bessel_j: argument must be finite and >= 0");
    }
    const long double lx = static_cast<long double>(x);
    if (x < 17.0) {
        return static_cast<double>(detail::bessel_series(n, lx));
    }
    const long double j0 = detail::bessel_asymptotic(0, lx);
    if (n == 0) {
        return static_cast<double>(j0);
    }
    const long double j1 = detail::bessel_asymptotic(1, lx);
    if (n == 1) {
        return static_cast<double>(j1);
    }
    return static_cast<double>(2.0L / lx * j1 - j0);
}

}  // namespace dipscat
