#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "dipscat/core.hpp"
#include "dipscat/geometry.hpp"
#include "dipscat/illumination.hpp"
#include "dipscat/scattering.hpp"
#include "dipscat/transmittance.hpp"

using namespace dipscat;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

const double half_pi = 0.5 * constants::pi;

double bisect_k0_unity(Illumination kind, double lo, double hi) {
    for (int i = 0; i < 100; ++i) {
        const double mid = 0.5 * (lo + hi);
        (k0_closed_form_value(kind, mid) < 1.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("scattering ratio closed forms hit the full-aperture endpoints") {
    CHECK_THAT(k0_closed_form_value(Illumination::PlaneWave, half_pi),
               WithinRel(128.0 / 75.0, 1e-14));
    CHECK_THAT(k0_closed_form_value(Illumination::DipolePlusMagnetic, half_pi),
               WithinRel(7.0 / 4.0, 1e-14));
    CHECK_THAT(k0_closed_form_value(Illumination::DipoleX, half_pi), WithinRel(2.0, 1e-14));
    CHECK_THAT(k0_closed_form_value(Illumination::DipoleZ, half_pi), WithinRel(2.0, 1e-14));
    CHECK_THROWS_AS(k0_closed_form_value(Illumination::PlaneWave, 0.0), std::domain_error);
    CHECK_THROWS_AS(k0_closed_form_value(Illumination::PlaneWave, half_pi + 0.1),
                    std::domain_error);
}

TEST_CASE("scattering ratio closed forms match the quadrature route") {
    for (Illumination kind : {Illumination::PlaneWave, Illumination::DipoleX,
                              Illumination::DipoleZ, Illumination::DipolePlusMagnetic}) {
        for (double alpha = 0.15; alpha <= half_pi; alpha += 0.175) {
            const IlluminationMode mode(kind);
            const double closed = k0_closed_form(mode, alpha).K0;
            const double oracle = k0_oracle(mode, GeometryConfig(alpha)).K0;
            INFO("mode=" << static_cast<int>(kind) << " alpha=" << alpha);
            CHECK_THAT(closed, WithinAbs(oracle, 1e-9));
        }
    }
}

TEST_CASE("scattering ratio grows monotonically with the aperture") {
    for (Illumination kind : {Illumination::PlaneWave, Illumination::DipoleX,
                              Illumination::DipoleZ, Illumination::DipolePlusMagnetic}) {
        double prev = 0.0;
        for (double alpha = 0.05; alpha <= half_pi; alpha += 0.02) {
            const double cur = k0_closed_form_value(kind, alpha);
            CHECK(cur > prev);
            CHECK(cur <= 2.0 + 1e-14);
            prev = cur;
        }
    }
}

TEST_CASE("unity-ratio apertures sit at their frozen locations") {
    CHECK_THAT(bisect_k0_unity(Illumination::DipoleX, 0.5, 1.2),
               WithinAbs(0.932196681039, 1e-9));
    CHECK_THAT(bisect_k0_unity(Illumination::DipolePlusMagnetic, 0.5, 1.2),
               WithinAbs(0.942952611913, 1e-9));
    CHECK_THAT(bisect_k0_unity(Illumination::PlaneWave, 0.5, 1.2),
               WithinAbs(0.943012159546, 1e-9));
    const double pz_cross = bisect_k0_unity(Illumination::DipoleZ, 0.8, 1.5);
    CHECK_THAT(pz_cross, WithinAbs(1.21610987014, 1e-9));
    // the z crossing solves c^3 - 3c + 1 = 0 for c = cos(alpha)
    const double c = std::cos(pz_cross);
    CHECK_THAT(c * c * c - 3.0 * c + 1.0, WithinAbs(0.0, 1e-9));
}

TEST_CASE("forward cap fraction of a transverse dipole") {
    CHECK_THAT(forward_cap_fraction(half_pi), WithinRel(0.5, 1e-15));
    CHECK_THAT(forward_cap_fraction(constants::pi / 3.0), WithinRel(0.296875, 1e-14));
    CHECK(forward_cap_fraction(1e-3) < 1e-5);
}

TEST_CASE("transmittance closed form reproduces frozen resonant values") {
    CHECK_THAT(transmittance_closed_form(half_pi, half_pi).T, WithinRel(11.0 / 75.0, 1e-12));
    CHECK_THAT(transmittance_closed_form(constants::pi / 3.0, constants::pi / 3.0).T,
               WithinAbs(0.187207565543, 1e-11));
    // pinhole collection limit: T(pi/2, beta -> 0) -> 1/25
    CHECK_THAT(transmittance_closed_form(half_pi, 2e-3).T, WithinAbs(1.0 / 25.0, 1e-5));
    // resonant full-aperture reflection
    CHECK_THAT(transmittance_closed_form(half_pi, half_pi).R, WithinRel(64.0 / 75.0, 1e-12));
    CHECK_THROWS_AS(transmittance_closed_form(0.5e-3, 1.0), std::domain_error);
    CHECK_THROWS_AS(transmittance_closed_form(1.0, 2.0), std::domain_error);
}

TEST_CASE("shadow-boundary transmittance folds into the scattering ratio") {
    // on the boundary beta = alpha: T = 1 - L K0_pw (1 - X)
    for (double d : {0.0, 0.8}) {
        for (double a = 0.2; a <= half_pi; a += 0.3) {
            const double t = transmittance_closed_form(a, a, d).T;
            const double want = 1.0 - lorentzian_line(d) *
                                          k0_closed_form_value(Illumination::PlaneWave, a) *
                                          (1.0 - forward_cap_fraction(a));
            CHECK_THAT(t, WithinAbs(want, 1e-13));
        }
    }
}

TEST_CASE("closed transmittance agrees with the interference oracle on a grid") {
    const IlluminationMode pw;
    for (double alpha : {0.3, 0.8, 1.2, half_pi}) {
        for (double beta : {0.4, 1.0, half_pi}) {
            const GeometryConfig geom(alpha, beta);
            const TransmittanceResult closed = transmittance_closed_form(alpha, beta);
            const TransmittanceResult oracle =
                transmittance_oracle(pw, geom, OscillatorParams(1.0, 0.0));
            INFO("alpha=" << alpha << " beta=" << beta);
            CHECK_THAT(closed.T, WithinAbs(oracle.T, 1e-9));
            CHECK_THAT(closed.R, WithinAbs(oracle.R, 1e-9));
        }
    }
}

TEST_CASE("detuning rescales the closed form by a single Lorentzian") {
    const IlluminationMode pw;
    const GeometryConfig geom(1.1, 0.9);
    for (double d : {-3.0, -1.0, 0.5, 2.0}) {
        const TransmittanceResult closed = transmittance_closed_form(1.1, 0.9, d);
        const TransmittanceResult oracle = transmittance_oracle(pw, geom, OscillatorParams(2.0, 2.0 * d));
        INFO("d=" << d);
        CHECK_THAT(closed.T, WithinAbs(oracle.T, 1e-9));
        CHECK_THAT(closed.R, WithinAbs(oracle.R, 1e-9));
        // explicit scaling law against the resonant dip
        const double t0 = transmittance_closed_form(1.1, 0.9, 0.0).T;
        CHECK_THAT(closed.T, WithinAbs(1.0 - lorentzian_line(d) * (1.0 - t0), 1e-13));
    }
}

TEST_CASE("transmitted plus reflected power closes at full collection") {
    for (double alpha : {0.3, 0.9, 1.3, half_pi}) {
        for (double d : {0.0, -0.7, 2.0}) {
            const TransmittanceResult res = transmittance_closed_form(alpha, half_pi, d);
            INFO("alpha=" << alpha << " d=" << d);
            CHECK_THAT(res.T + res.R, WithinRel(1.0, 1e-12));
        }
    }
    // partial collection strictly loses power
    const TransmittanceResult partial = transmittance_closed_form(1.2, 0.7);
    CHECK(partial.T + partial.R < 1.0);
}

TEST_CASE("dipole-wave illumination extinguishes completely on resonance") {
    const GeometryConfig geom(half_pi, half_pi);
    const IlluminationMode px(Illumination::DipoleX);
    const TransmittanceResult res = transmittance_oracle(px, geom, OscillatorParams(1.0, 0.0));
    CHECK_THAT(res.T, WithinAbs(0.0, 1e-10));
    CHECK_THAT(res.R, WithinAbs(1.0, 1e-10));
    CHECK(dipole_wave_transmittance(0.0) == 0.0);
    for (double d : {0.3, 0.7, 1.5}) {
        const TransmittanceResult detuned =
            transmittance_oracle(px, geom, OscillatorParams(1.0, d));
        INFO("d=" << d);
        CHECK_THAT(detuned.T, WithinAbs(dipole_wave_transmittance(d), 1e-10));
        CHECK_THAT(detuned.T, WithinAbs(1.0 - lorentzian_line(d), 1e-12));
        CHECK_THAT(detuned.T + detuned.R, WithinRel(1.0, 1e-10));
    }
}

TEST_CASE("backward reflection follows the half-ratio rule and caps at 64/75") {
    std::vector<double> alphas;
    for (double a = 0.2; a <= half_pi; a += 0.15) alphas.push_back(a);
    alphas.push_back(half_pi);
    const ReflectanceReport report = reflectance_bound_check(alphas);
    REQUIRE(report.samples.size() == alphas.size());
    CHECK(report.max_abs_deviation < 1e-9);
    CHECK(report.max_r_backward <= 64.0 / 75.0 + 1e-10);
    CHECK_THAT(report.samples.back().r_backward, WithinAbs(64.0 / 75.0, 1e-9));
    // reflection grows with the aperture
    for (std::size_t i = 1; i < report.samples.size(); ++i) {
        CHECK(report.samples[i].r_backward > report.samples[i - 1].r_backward);
    }
}

TEST_CASE("shadow-boundary minimum sits at its frozen location") {
    const ShadowBoundaryMinimum min = shadow_boundary_minimum(1e-8);
    CHECK_THAT(min.alpha, WithinAbs(1.35953815443, 1e-6));
    CHECK_THAT(min.T, WithinAbs(0.100122432255, 1e-9));
    // detuning makes the dip shallower but leaves the location unchanged
    const ShadowBoundaryMinimum detuned = shadow_boundary_minimum(1e-8, 1.0);
    CHECK(detuned.T > min.T);
    CHECK_THAT(detuned.alpha, WithinAbs(min.alpha, 1e-5));
    CHECK_THAT(1.0 - detuned.T, WithinAbs(lorentzian_line(1.0) * (1.0 - min.T), 1e-10));
}

TEST_CASE("two-level oracle reduces to the classical one and saturates") {
    const GeometryConfig geom(half_pi, half_pi);
    const IlluminationMode px(Illumination::DipoleX);
    const OscillatorParams osc(1.0, 0.0);
    const TransmittanceResult weak = transmittance_oracle_tls(px, geom, TlsParams(osc, 0.0));
    const TransmittanceResult classical = transmittance_oracle(px, geom, osc);
    CHECK_THAT(weak.T, WithinAbs(classical.T, 1e-12));
    CHECK_THAT(weak.R, WithinAbs(classical.R, 1e-12));

    // at 2 V^2 = Gamma^2 the coherent amplitude halves, so the dipole-wave
    // transmission becomes |1 - 1/2|^2 = 1/4
    const TransmittanceResult half =
        transmittance_oracle_tls(px, geom, TlsParams(osc, 1.0 / std::sqrt(2.0)));
    CHECK_THAT(half.T, WithinAbs(0.25, 1e-9));

    double prev = weak.T;
    for (double v = 0.5; v <= 4.0; v += 0.5) {
        const double cur = transmittance_oracle_tls(px, geom, TlsParams(osc, v)).T;
        CHECK(cur > prev);
        prev = cur;
    }
}

TEST_CASE("result structs reject unphysical values") {
    CHECK_THROWS_AS(ScatteringRatio(2.5, Illumination::PlaneWave, 1.0), accuracy_error);
    CHECK_THROWS_AS(ScatteringRatio(-0.1, Illumination::PlaneWave, 1.0), accuracy_error);
    CHECK_THROWS_AS(TransmittanceResult(1.1, 0.0, 1.0, 1.0, 0.0), accuracy_error);
    CHECK_THROWS_AS(TransmittanceResult(0.5, -0.2, 1.0, 1.0, 0.0), accuracy_error);
    CHECK_NOTHROW(TransmittanceResult(0.0, 1.0, half_pi, half_pi, 0.0));
}
