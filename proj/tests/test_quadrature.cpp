#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>

#include "dipscat/core.hpp"
#include "dipscat/quadrature.hpp"

using namespace dipscat;

TEST_CASE("gauss rules have symmetric nodes and positive weights summing to 2") {
    for (int order : {2, 3, 7, 16, 33, 64, 257}) {
        const QuadratureRule rule = gauss_legendre(order);
        REQUIRE(rule.nodes.size() == static_cast<std::size_t>(order));
        REQUIRE(rule.weights.size() == rule.nodes.size());
        double sum = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            CHECK(rule.weights[i] > 0.0);
            CHECK(rule.nodes[i] == -rule.nodes[rule.nodes.size() - 1 - i]);
            if (i) CHECK(rule.nodes[i] > rule.nodes[i - 1]);
            sum += rule.weights[i];
        }
        CHECK_THAT(sum, Catch::Matchers::WithinAbs(2.0, 1e-13));
    }
}

TEST_CASE("order-5 rule matches the tabulated nodes and weights") {
    // classical values, e.g. Abramowitz & Stegun table 25.4
    const QuadratureRule rule = gauss_legendre(5);
    CHECK_THAT(rule.nodes[2], Catch::Matchers::WithinAbs(0.0, 1e-15));
    CHECK_THAT(rule.nodes[3], Catch::Matchers::WithinAbs(0.5384693101056831, 1e-14));
    CHECK_THAT(rule.nodes[4], Catch::Matchers::WithinAbs(0.9061798459386640, 1e-14));
    CHECK_THAT(rule.weights[2], Catch::Matchers::WithinAbs(0.5688888888888889, 1e-14));
    CHECK_THAT(rule.weights[3], Catch::Matchers::WithinAbs(0.4786286704993665, 1e-14));
    CHECK_THAT(rule.weights[4], Catch::Matchers::WithinAbs(0.2369268850561891, 1e-14));
}

TEST_CASE("order-n rule integrates monomials exactly through degree 2n-1") {
    for (int order : {2, 5, 12}) {
        const QuadratureRule rule = gauss_legendre(order);
        for (int k = 0; k <= 2 * order - 1; ++k) {
            double acc = 0.0;
            for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
                acc += rule.weights[i] * std::pow(rule.nodes[i], k);
            }
            const double exact = k % 2 ? 0.0 : 2.0 / (k + 1);
            CHECK_THAT(acc, Catch::Matchers::WithinAbs(exact, 1e-13));
        }
    }
}

TEST_CASE("gauss order outside [2, 4096] is rejected") {
    CHECK_THROWS_AS(gauss_legendre(1), std::invalid_argument);
    CHECK_THROWS_AS(gauss_legendre(0), std::invalid_argument);
    CHECK_THROWS_AS(gauss_legendre(-3), std::invalid_argument);
    CHECK_THROWS_AS(gauss_legendre(4097), std::invalid_argument);
}

TEST_CASE("adaptive integration reproduces antiderivatives") {
    const QuadratureRule rule = gauss_legendre(8);
    IntegrateOptions opt;
    opt.rel_tol = 1e-12;
    const double e1 = integrate_1d([](double x) { return std::exp(x); }, 0.0, 1.0, rule, opt);
    CHECK_THAT(e1, Catch::Matchers::WithinRel(std::exp(1.0) - 1.0, 1e-11));

    const double s = integrate_1d([](double x) { return std::sin(x); }, 0.0, constants::pi,
                                  rule, opt);
    CHECK_THAT(s, Catch::Matchers::WithinRel(2.0, 1e-11));

    // oscillatory but resolvable: int_0^1 cos(40 x) dx = sin(40)/40
    const double c = integrate_1d([](double x) { return std::cos(40.0 * x); }, 0.0, 1.0, rule,
                                  opt);
    CHECK_THAT(c, Catch::Matchers::WithinAbs(std::sin(40.0) / 40.0, 1e-12));
}

TEST_CASE("reversed limits flip the sign, empty interval gives zero") {
    const QuadratureRule rule = gauss_legendre(8);
    const double fwd = integrate_1d([](double x) { return x * x; }, 0.0, 2.0, rule);
    const double bwd = integrate_1d([](double x) { return x * x; }, 2.0, 0.0, rule);
    CHECK_THAT(fwd, Catch::Matchers::WithinRel(8.0 / 3.0, 1e-12));
    CHECK_THAT(fwd + bwd, Catch::Matchers::WithinAbs(0.0, 1e-14));
    CHECK(integrate_1d([](double x) { return x; }, 1.0, 1.0, rule) == 0.0);
}

TEST_CASE("non-finite interval is rejected") {
    const QuadratureRule rule = gauss_legendre(4);
    CHECK_THROWS_AS(integrate_1d([](double x) { return x; }, 0.0,
                                 std::numeric_limits<double>::infinity(), rule),
                    std::invalid_argument);
    CHECK_THROWS_AS(integrate_1d([](double x) { return x; },
                                 std::numeric_limits<double>::quiet_NaN(), 1.0, rule),
                    std::invalid_argument);
}

TEST_CASE("exhausted refinement budget throws with estimate and gap attached") {
    const QuadratureRule rule = gauss_legendre(2);
    IntegrateOptions opt;
    opt.rel_tol = 1e-14;
    opt.max_refinements = 2;
    bool thrown = false;
    try {
        integrate_1d([](double x) { return std::cos(200.0 * x * x); }, 0.0, 3.0, rule, opt);
    } catch (const accuracy_error& e) {
        thrown = true;
        CHECK(std::isfinite(e.estimate()));
        CHECK(e.gap() > 0.0);
    }
    CHECK(thrown);
}

TEST_CASE("complex and vector integrands integrate componentwise") {
    const QuadratureRule rule = gauss_legendre(8);
    IntegrateOptions opt;
    opt.rel_tol = 1e-12;
    const Complex ph = integrate_1d(
        [](double x) { return std::exp(Complex(0.0, x)); }, 0.0, 0.5 * constants::pi, rule, opt);
    CHECK_THAT(std::real(ph), Catch::Matchers::WithinAbs(1.0, 1e-12));
    CHECK_THAT(std::imag(ph), Catch::Matchers::WithinAbs(1.0, 1e-12));

    const CVec3 vec = integrate_1d(
        [](double x) {
            return CVec3{Complex(x), Complex(0.0, x * x), Complex(std::sin(x))};
        },
        0.0, 1.0, rule, opt);
    CHECK_THAT(std::real(vec.x), Catch::Matchers::WithinAbs(0.5, 1e-12));
    CHECK_THAT(std::imag(vec.y), Catch::Matchers::WithinAbs(1.0 / 3.0, 1e-12));
    CHECK_THAT(std::real(vec.z), Catch::Matchers::WithinAbs(1.0 - std::cos(1.0), 1e-12));
}

TEST_CASE("periodic trapezoid is exact for trig polynomials below the alias order") {
    const double base = integrate_periodic([](double) { return 1.0; }, 16);
    CHECK_THAT(base, Catch::Matchers::WithinRel(2.0 * constants::pi, 1e-14));
    const double mix = integrate_periodic(
        [](double p) { return 2.0 + std::cos(3.0 * p) - 0.25 * std::sin(7.0 * p); }, 16);
    CHECK_THAT(mix, Catch::Matchers::WithinRel(4.0 * constants::pi, 1e-13));
    // cos^2 has a degree-2 component: mean 1/2
    const double sq = integrate_periodic([](double p) { return std::cos(p) * std::cos(p); }, 8);
    CHECK_THAT(sq, Catch::Matchers::WithinRel(constants::pi, 1e-13));
}
