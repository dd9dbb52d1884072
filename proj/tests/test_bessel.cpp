#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "dipscat/bessel.hpp"
#include "dipscat/core.hpp"
#include "dipscat/quadrature.hpp"

using namespace dipscat;

namespace {

// Independent check value from the integral representation
//   J_n(x) = (1/pi) * int_0^pi cos(n*t - x*sin(t)) dt,
// evaluated with a composite Gauss rule sized to the oscillation count.
double bessel_reference(int n, double x) {
    static const QuadratureRule rule = gauss_legendre(32);
    const int panels = std::max(8, static_cast<int>(std::ceil(x / 4.0)));
    const double h = constants::pi / panels;
    double acc = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double a = p * h;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            const double t = a + 0.5 * h * (rule.nodes[i] + 1.0);
            acc += 0.5 * h * rule.weights[i] * std::cos(n * t - x * std::sin(t));
        }
    }
    return acc / constants::pi;
}

}  // namespace

TEST_CASE("bessel_j matches the integral representation on a dense grid") {
    for (int n = 0; n <= 2; ++n) {
        for (double x = 0.0; x <= 60.0; x += 0.37) {
            INFO("n=" << n << " x=" << x);
            CHECK_THAT(bessel_j(n, x),
                       Catch::Matchers::WithinAbs(bessel_reference(n, x), 1e-12));
        }
    }
}

TEST_CASE("bessel_j is seamless across the series/asymptotic switch") {
    for (int n = 0; n <= 2; ++n) {
        for (double x = 15.0; x <= 19.0; x += 0.01) {
            INFO("n=" << n << " x=" << x);
            CHECK_THAT(bessel_j(n, x),
                       Catch::Matchers::WithinAbs(bessel_reference(n, x), 1e-12));
        }
    }
}

TEST_CASE("bessel_j agrees with the standard library implementation") {
    for (int n = 0; n <= 2; ++n) {
        for (double x : {0.1, 0.5, 1.0, 2.404825557695773, 5.0, 11.0, 16.9, 17.1, 25.0, 80.0,
                         250.0}) {
            INFO("n=" << n << " x=" << x);
            CHECK_THAT(bessel_j(n, x),
                       Catch::Matchers::WithinAbs(std::cyl_bessel_j(double(n), x), 1e-12));
        }
    }
}

TEST_CASE("known special values and small-argument behavior") {
    CHECK(bessel_j(0, 0.0) == 1.0);
    CHECK(bessel_j(1, 0.0) == 0.0);
    CHECK(bessel_j(2, 0.0) == 0.0);
    // leading-order series: J1 ~ x/2, J2 ~ x^2/8
    const double eps = 1e-6;
    CHECK_THAT(bessel_j(1, eps), Catch::Matchers::WithinRel(eps / 2.0, 1e-10));
    CHECK_THAT(bessel_j(2, eps), Catch::Matchers::WithinRel(eps * eps / 8.0, 1e-9));
}

TEST_CASE("first zero of J0 sits at the textbook location") {
    double lo = 2.0, hi = 3.0;
    REQUIRE(bessel_j(0, lo) > 0.0);
    REQUIRE(bessel_j(0, hi) < 0.0);
    for (int i = 0; i < 80; ++i) {
        const double mid = 0.5 * (lo + hi);
        (bessel_j(0, mid) > 0.0 ? lo : hi) = mid;
    }
    CHECK_THAT(0.5 * (lo + hi), Catch::Matchers::WithinAbs(2.404825557695773, 1e-12));
}

TEST_CASE("recurrence J1(x)*2/x = J0(x) + J2(x) holds across regimes") {
    for (double x : {0.3, 1.7, 8.0, 16.5, 17.5, 42.0, 130.0}) {
        CHECK_THAT(2.0 * bessel_j(1, x) / x,
                   Catch::Matchers::WithinAbs(bessel_j(0, x) + bessel_j(2, x), 1e-12));
    }
}

TEST_CASE("invalid order or argument is rejected") {
    CHECK_THROWS_AS(bessel_j(3, 1.0), std::domain_error);
    CHECK_THROWS_AS(bessel_j(-1, 1.0), std::domain_error);
    CHECK_THROWS_AS(bessel_j(0, -0.5), std::domain_error);
    CHECK_THROWS_AS(bessel_j(0, std::numeric_limits<double>::quiet_NaN()), std::domain_error);
    CHECK_THROWS_AS(bessel_j(0, std::numeric_limits<double>::infinity()), std::domain_error);
}
