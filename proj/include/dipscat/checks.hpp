#pragma once

// Runtime self-verification: every module invariant expressed as a named
// check with a measured residual and a pinned tolerance. The `verify` CLI
// command runs the full list; tests reuse individual groups. Residuals are
// always >= 0 and a check passes when residual <= tolerance * tol_scale.

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "bessel.hpp"
#include "core.hpp"
#include "geometry.hpp"
#include "illumination.hpp"
#include "multipole.hpp"
#include "quadrature.hpp"
#include "scattering.hpp"
#include "transmittance.hpp"

namespace dipscat {

struct CheckResult {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::string detail;
};

namespace detail {

inline void add_check(std::vector<CheckResult>& out, std::string name, double residual,
                      double tolerance, double tol_scale, std::string detail_text = {}) {
    CheckResult r;
    r.name = std::move(name);
    r.residual = residual;
    r.tolerance = tolerance * tol_scale;
    r.pass = residual <= r.tolerance;
    r.detail = std::move(detail_text);
    out.push_back(std::move(r));
}

}  // namespace detail

// --- numerics -------------------------------------------------------------

inline std::vector<CheckResult> numeric_checks(double tol_scale = 1.0) {
    std::vector<CheckResult> out;

    {  // Gauss-Legendre order n is exact through polynomial degree 2n-1
        const QuadratureRule rule = gauss_legendre(16);
        double acc = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            acc += rule.weights[i] * std::pow(rule.nodes[i], 30);
        }
        detail::add_check(out, "gauss-degree-31-exactness", std::abs(acc - 2.0 / 31.0), 1e-13,
                          tol_scale, "order 16 on x^30 over [-1, 1]");
    }
    {  // weights integrate the constant exactly
        const QuadratureRule rule = gauss_legendre(64);
        double acc = 0.0;
        double asym = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            acc += rule.weights[i];
            asym = std::max(asym, std::abs(rule.nodes[i] + rule.nodes[rule.nodes.size() - 1 - i]));
        }
        detail::add_check(out, "gauss-weight-sum", std::abs(acc - 2.0), 1e-13, tol_scale,
                          "order 64 weight sum = 2");
        detail::add_check(out, "gauss-node-symmetry", asym, 1e-15, tol_scale,
                          "nodes mirror about the origin");
    }
    {  // adaptive panel refinement hits its requested accuracy
        const QuadratureRule rule = gauss_legendre(8);
        IntegrateOptions opt;
        opt.rel_tol = 1e-12;
        const double val =
            integrate_1d([](double x) { return std::exp(x); }, 0.0, 1.0, rule, opt);
        const double exact = std::exp(1.0) - 1.0;
        detail::add_check(out, "panel-refinement-accuracy", std::abs(val / exact - 1.0), 1e-11,
                          tol_scale, "exp over [0, 1] against the antiderivative");
    }
    {  // trapezoid rule is exact for trig polynomials below the alias order
        const double val = integrate_periodic(
            [](double phi) { return 1.0 + 0.3 * std::cos(4.0 * phi) + 0.2 * std::sin(7.0 * phi); },
            32);
        detail::add_check(out, "periodic-trig-exactness", std::abs(val - 2.0 * constants::pi),
                          1e-13, tol_scale, "degree-7 trig polynomial, 32 points");
    }
    {  // J0 + J2 = (2/x) J1 across both evaluation branches
        double worst = 0.0;
        for (double x : {0.05, 0.4, 1.3, 5.0, 11.0, 16.9, 17.1, 24.0, 60.0, 300.0, 1000.0}) {
            const double lhs = bessel_j(0, x) + bessel_j(2, x);
            const double rhs = 2.0 / x * bessel_j(1, x);
            worst = std::max(worst, std::abs(lhs - rhs));
        }
        detail::add_check(out, "bessel-recurrence", worst, 1e-11, tol_scale,
                          "J0 + J2 = (2/x) J1 on a log grid spanning the series/asymptotic switch");
    }
    {  // first zero of J0
        detail::add_check(out, "bessel-j0-first-zero", std::abs(bessel_j(0, 2.404825557695773)),
                          1e-11, tol_scale, "J0 vanishes at its first root");
    }
    return out;
}

// --- illumination ----------------------------------------------------------

inline std::vector<CheckResult> illumination_checks(double tol_scale = 1.0) {
    std::vector<CheckResult> out;
    const std::vector<IlluminationMode> modes = {
        {Illumination::PlaneWave}, {Illumination::DipoleX},
        {Illumination::DipoleZ},   {Illumination::DipolePlusMagnetic}};

    {  // strength vectors are transverse and s x A preserves the norm
        double worst_trans = 0.0;
        double worst_norm = 0.0;
        for (const auto& mode : modes) {
            for (double theta : {0.08, 0.6, 1.1, 1.5}) {
                for (double phi : {0.0, 0.9, 2.3, 4.4}) {
                    detail::PolarPoint pt{std::cos(theta), std::sin(theta), phi};
                    const Vec3 s = detail::unit_radial(pt.cos_theta, pt.sin_theta, phi);
                    const CVec3 a = detail::strength_cartesian(mode, pt);
                    const CVec3 h = detail::magnetic_strength_cartesian(mode, pt);
                    worst_trans = std::max(worst_trans, std::abs(cdot(a, s)));
                    worst_norm = std::max(worst_norm, std::abs(norm2(h) - norm2(a)));
                }
            }
        }
        detail::add_check(out, "strength-transversality", worst_trans, 1e-13, tol_scale,
                          "A . s = 0 for all modes");
        detail::add_check(out, "magnetic-strength-norm", worst_norm, 1e-13, tol_scale,
                          "|s x A| = |A| pointwise");
    }
    {  // focusing conserves the aperture-plane power
        double worst = 0.0;
        for (double alpha : {0.3, 0.8, 1.2, 0.5 * constants::pi}) {
            const GeometryConfig geom(alpha);
            const double p = incident_power({}, geom);
            const double disk = 0.5 * constants::light_speed * constants::vacuum_permittivity *
                                constants::pi * geom.aperture_radius * geom.aperture_radius;
            worst = std::max(worst, std::abs(p / disk - 1.0));
        }
        detail::add_check(out, "lens-power-conservation", worst, 1e-10, tol_scale,
                          "cap flux equals the flat input-disk flux (plane wave)");
    }
    {  // numeric diffraction integrals agree with the closed on-axis form
        double worst0 = 0.0;
        double worst12 = 0.0;
        for (double alpha : {0.4, 1.0, 0.5 * constants::pi}) {
            const GeometryConfig geom(alpha);
            const DiffractionIntegrals d = diffraction_integrals(geom, 0.0);
            worst0 = std::max(worst0,
                              std::abs(std::real(d.I0) - on_axis_integral_closed(alpha)));
            worst12 = std::max({worst12, std::abs(d.I1), std::abs(d.I2)});
        }
        detail::add_check(out, "on-axis-integral-closed-form", worst0, 1e-10, tol_scale,
                          "I0(rho = 0) quadrature vs closed form");
        detail::add_check(out, "on-axis-higher-orders-vanish", worst12, 1e-13, tol_scale,
                          "I1, I2 vanish on axis");
    }
    {  // plane-wave focal field is purely x-polarized
        const GeometryConfig geom(1.2);
        const CVec3 e = focal_field({}, geom);
        const double off = (std::abs(e.y) + std::abs(e.z)) / std::abs(e.x);
        detail::add_check(out, "focal-field-polarization", off, 1e-12, tol_scale,
                          "E(O) along x for the focused plane wave");
    }
    {  // profile at the origin reproduces the on-axis normalization
        const GeometryConfig geom(0.5 * constants::pi);
        const FocalFieldSample s = focal_plane_profile(geom, 0.0);
        const double res = std::abs(s.S_z - 1.0) + std::abs(s.W_el - 1.0);
        detail::add_check(out, "focal-profile-origin-normalization", res, 1e-12, tol_scale,
                          "S_z(0) = W_el(0) = 1 after normalization");
    }
    {  // three power routes agree: cap flux, effective-area identity, focal plane
        const GeometryConfig geom(0.5 * constants::pi);
        const double area_identity = effective_area({}, geom);
        const double area_plane = effective_area_focal_plane(geom, 120.0);
        detail::add_check(out, "effective-area-two-routes",
                          std::abs(area_plane / area_identity - 1.0), 2e-3, tol_scale,
                          "focal-plane flux integral vs P/(2 c W_el) at full aperture");
        const double p_plane = focal_plane_power({}, geom, 120.0);
        const double p_cap = incident_power({}, geom);
        detail::add_check(out, "focal-plane-power-route", std::abs(p_plane / p_cap - 1.0), 2e-3,
                          tol_scale, "S_z flux through the focal plane vs cap power");
    }
    return out;
}

// --- scattering -----------------------------------------------------------

inline std::vector<CheckResult> scattering_checks(double tol_scale = 1.0) {
    std::vector<CheckResult> out;
    const std::vector<double> detunings = {-3.0, -0.7, 0.0, 0.4, 1.9, 12.0};

    {  // resonant amplitude is +3i/2 and bounds every detuned value
        const Complex a0 = scattering_amplitude({1.0, 0.0}).amplitude;
        detail::add_check(out, "resonant-amplitude-value", std::abs(a0 - Complex(0.0, 1.5)),
                          1e-14, tol_scale, "amplitude(0) = 3i/2");
        double worst = 0.0;
        for (double d : detunings) {
            worst = std::max(worst, std::abs(scattering_amplitude({1.0, d}).amplitude) - 1.5);
        }
        detail::add_check(out, "amplitude-bound", std::max(0.0, worst), 1e-12, tol_scale,
                          "|amplitude| <= 3/2 off resonance");
    }
    {  // response weight obeys Re l = |l|^2
        double worst = 0.0;
        for (double d : detunings) {
            const Complex l = lorentzian_weight({1.0, d});
            worst = std::max(worst, std::abs(std::real(l) - std::norm(l)));
        }
        detail::add_check(out, "lorentzian-weight-identity", worst, 1e-14, tol_scale,
                          "Re l(Delta) = |l(Delta)|^2");
    }
    {  // cross-section profile
        double worst = 0.0;
        for (double d : detunings) {
            const double expected = constants::resonant_cross_section / (4.0 * d * d + 1.0);
            worst = std::max(worst, std::abs(cross_section({1.0, d}) / expected - 1.0));
        }
        detail::add_check(out, "cross-section-lorentzian", worst, 1e-13, tol_scale,
                          "sigma(Delta) = sigma0 / (4 (Delta/Gamma)^2 + 1)");
    }
    {  // two-level amplitude: classical limit and monotone saturation
        double worst = 0.0;
        for (double d : detunings) {
            const Complex tls = scattering_amplitude_tls({{1.0, d}, 0.0}).amplitude;
            const Complex cls = scattering_amplitude({1.0, d}).amplitude;
            worst = std::max(worst, std::abs(tls - cls));
        }
        detail::add_check(out, "two-level-classical-limit", worst, 1e-14, tol_scale,
                          "driven two-level amplitude -> classical as the drive vanishes");
        double prev = std::abs(scattering_amplitude_tls({{1.0, 0.3}, 0.0}).amplitude);
        double grow = 0.0;
        for (double v : {0.5, 1.0, 2.0, 4.0}) {
            const double cur = std::abs(scattering_amplitude_tls({{1.0, 0.3}, v}).amplitude);
            grow = std::max(grow, cur - prev);
            prev = cur;
        }
        detail::add_check(out, "two-level-saturation-monotone", std::max(0.0, grow), 0.0,
                          tol_scale, "|amplitude| decreases with drive strength");
    }
    {  // far field is transverse
        const OscillatorParams p(1.0, 0.4);
        double worst = 0.0;
        for (double theta : {0.3, 1.0, 2.2}) {
            for (double phi : {0.4, 2.0, 5.1}) {
                const Vec3 r = detail::unit_radial(std::cos(theta), std::sin(theta), phi);
                for (DipoleAxis axis : {DipoleAxis::X, DipoleAxis::Z}) {
                    const CVec3 e = scattered_far_field(p, Complex(1.0, 0.2), r, 250.0, axis);
                    worst = std::max(worst, std::abs(cdot(e, r)));
                }
            }
        }
        detail::add_check(out, "scattered-field-transversality", worst, 1e-14, tol_scale,
                          "far field orthogonal to the line of sight");
    }
    return out;
}

// --- multipole ------------------------------------------------------------

inline std::vector<CheckResult> multipole_checks(double tol_scale = 1.0) {
    std::vector<CheckResult> out;

    {  // origin value of the fundamental electric dipole mode
        const CVec3 n0 = n_e11(0.3, 1.0, 0.0);
        const CVec3 target{Complex(2.0 / 3.0), Complex(0.0), Complex(0.0)};
        detail::add_check(out, "dipole-mode-origin-value", norm(n0 - target), 1e-14, tol_scale,
                          "N(O) = (2/3) e_x");
    }
    {  // far-field pattern norm: full-sphere integral of |N|^2 (kr)^2 = 8 pi / 3
        const double kr = 400.0;
        const double half = detail::integrate_cap(
            [&](const detail::PolarPoint& pt) {
                const double theta = std::acos(pt.cos_theta);
                const FarFieldSample s = n_e11_far_field(theta, pt.phi, kr);
                return std::norm(s.e_theta) + std::norm(s.e_phi);
            },
            0.0, 0.5 * constants::pi);
        const double full = 2.0 * half * kr * kr;  // pattern symmetric fore/aft
        detail::add_check(out, "dipole-mode-pattern-norm",
                          std::abs(full / (8.0 * constants::pi / 3.0) - 1.0), 1e-10, tol_scale,
                          "solid-angle norm of the far pattern");
    }
    {  // z-oriented mode is the rotation of the x-oriented one
        const double theta = 0.7;
        const double kr = 300.0;
        const FarFieldSample z = n_e11_far_field(theta, 0.3, kr, DipoleAxis::Z);
        // rotating x->z maps the pattern peak to the equator: at phi = 0 the
        // x mode has e_theta = cos(theta') with theta' measured from x
        const FarFieldSample x = n_e11_far_field(0.5 * constants::pi - theta, 0.0, kr);
        detail::add_check(out, "dipole-mode-rotation", std::abs(std::abs(z.e_theta) -
                          std::abs(x.e_theta)), 1e-13, tol_scale,
                          "z mode equals the rotated x mode");
    }
    {  // perfect reflection: scattered field cancels the outgoing mode component
        const OscillatorParams resonant(1.0, 0.0);
        double worst = 0.0;
        for (double alpha : {0.9, 0.5 * constants::pi}) {
            worst = std::max(worst, verify_perfect_reflection(GeometryConfig(alpha), resonant));
        }
        detail::add_check(out, "perfect-reflection-cancellation", worst, 1e-9, tol_scale,
                          "E_sca = -Psi on resonance for every aperture");
    }
    {  // the residual metric must catch a sign error (miswiring detector)
        const GeometryConfig geom(1.1);
        const IlluminationMode mode(Illumination::DipoleX);
        const CVec3 e_focus = focal_field(mode, geom);
        const Complex e_along = cdot(e_focus, Vec3{1.0, 0.0, 0.0});
        const double kr = 1e4;
        const FarFieldSample far = n_e11_far_field(0.6, 0.9, kr);
        const CVec3 psi = (1.5 * e_along) * far.cartesian();
        const Vec3 r_hat = detail::unit_radial(std::cos(0.6), std::sin(0.6), 0.9);
        const CVec3 sca = scattered_far_field({1.0, 0.0}, e_along, r_hat, kr);
        const double flipped = norm(sca - psi) / norm(psi);
        detail::add_check(out, "reflection-sign-sensitivity", std::abs(flipped - 2.0), 1e-9,
                          tol_scale, "a flipped scattered sign must register residual 2");
    }
    {  // detuning rotates the cancellation away at the known rate
        const GeometryConfig geom(1.1);
        const IlluminationMode mode(Illumination::DipoleX);
        const CVec3 e_focus = focal_field(mode, geom);
        const Complex e_along = cdot(e_focus, Vec3{1.0, 0.0, 0.0});
        const double kr = 1e4;
        const double d = 0.5;
        const FarFieldSample far = n_e11_far_field(0.6, 0.9, kr);
        const CVec3 psi = (1.5 * e_along) * far.cartesian();
        const Vec3 r_hat = detail::unit_radial(std::cos(0.6), std::sin(0.6), 0.9);
        const CVec3 sca = scattered_far_field({1.0, d}, e_along, r_hat, kr);
        const double residual = norm(sca + psi) / norm(psi);
        const double expected = 2.0 * std::abs(d) / std::sqrt(4.0 * d * d + 1.0);
        detail::add_check(out, "detuned-cancellation-residual", std::abs(residual - expected),
                          1e-10, tol_scale, "|E_sca + Psi| / |Psi| = 2|d| / sqrt(4 d^2 + 1)");
    }
    {  // content fraction ties the scattering ratios of different modes together
        double worst = 0.0;
        for (double alpha : {0.7, 1.2, 0.5 * constants::pi}) {
            const GeometryConfig geom(alpha);
            for (Illumination kind : {Illumination::PlaneWave, Illumination::DipolePlusMagnetic}) {
                const IlluminationMode mode(kind);
                const double content = dipole_wave_component(mode, geom).content_fraction;
                const double lhs = k0_oracle(mode, geom).K0;
                const double rhs = k0_closed_form_value(Illumination::DipoleX, alpha) * content;
                worst = std::max(worst, std::abs(lhs - rhs));
            }
        }
        detail::add_check(out, "content-scaling-identity", worst, 1e-9, tol_scale,
                          "K0(mode) = K0(dipole wave) x content fraction");
        const double pure =
            dipole_wave_component(IlluminationMode(Illumination::DipoleX), GeometryConfig(1.0))
                .content_fraction;
        detail::add_check(out, "content-pure-mode", std::abs(pure - 1.0), 1e-11, tol_scale,
                          "a pure dipole wave has content fraction 1");
    }
    return out;
}

// --- transmittance ----------------------------------------------------------

inline std::vector<CheckResult> transmittance_checks(double tol_scale = 1.0) {
    std::vector<CheckResult> out;
    const std::vector<IlluminationMode> modes = {
        {Illumination::PlaneWave}, {Illumination::DipoleX},
        {Illumination::DipoleZ},   {Illumination::DipolePlusMagnetic}};

    {  // scattering-ratio closed forms vs the all-quadrature route
        double worst = 0.0;
        for (const auto& mode : modes) {
            for (double alpha : {0.35, 0.8, 1.2, 1.45, 0.5 * constants::pi}) {
                const GeometryConfig geom(alpha);
                const double oracle = k0_oracle(mode, geom).K0;
                const double closed = k0_closed_form_value(mode.kind, alpha);
                worst = std::max(worst, std::abs(oracle - closed));
            }
        }
        detail::add_check(out, "scattering-ratio-closed-forms", worst, 1e-9, tol_scale,
                          "K0 quadrature vs closed form, all modes");
    }
    {  // the focal-density bound K0 <= 2 is saturated by both dipole waves
        const GeometryConfig full(0.5 * constants::pi);
        const double kx = k0_oracle(IlluminationMode(Illumination::DipoleX), full).K0;
        const double kz = k0_oracle(IlluminationMode(Illumination::DipoleZ), full).K0;
        const double res = std::max(std::abs(kx - 2.0), std::abs(kz - 2.0));
        detail::add_check(out, "focal-density-bound-saturation", res, 1e-9, tol_scale,
                          "K0 reaches 2 for full-aperture dipole waves");
    }
    {  // transmission closed form vs the interference oracle
        double worst_t = 0.0;
        double worst_r = 0.0;
        const double grid[][2] = {{0.5 * constants::pi, 0.5 * constants::pi},
                                  {1.0, 0.6},
                                  {0.6, 1.0},
                                  {1.2, 1.2},
                                  {constants::pi / 3.0, constants::pi / 3.0}};
        for (const auto& ab : grid) {
            for (double d : {0.0, 0.5, -1.3}) {
                const GeometryConfig geom(ab[0], ab[1]);
                const TransmittanceResult oracle =
                    transmittance_oracle({}, geom, {1.0, d});
                const TransmittanceResult closed =
                    transmittance_closed_form(ab[0], ab[1], d);
                worst_t = std::max(worst_t, std::abs(oracle.T - closed.T));
                worst_r = std::max(worst_r, std::abs(oracle.R - closed.R));
            }
        }
        detail::add_check(out, "transmittance-closed-form", worst_t, 1e-9, tol_scale,
                          "plane-wave T: quadrature vs closed form");
        detail::add_check(out, "reflectance-closed-form", worst_r, 1e-9, tol_scale,
                          "plane-wave R: quadrature vs closed form");
    }
    {  // elastic energy closure with a hemispheric collector
        double worst = 0.0;
        for (double alpha : {0.5, 1.0, 0.5 * constants::pi}) {
            for (double d : {0.0, 0.8}) {
                const GeometryConfig geom(alpha, 0.5 * constants::pi);
                const TransmittanceResult r = transmittance_oracle({}, geom, {1.0, d});
                worst = std::max(worst, std::abs(r.T + r.R - 1.0));
            }
        }
        detail::add_check(out, "energy-closure", worst, 1e-9, tol_scale,
                          "T + R = 1 for a lossless scatterer, full collection");
    }
    {  // transmission is symmetric in the detuning sign
        const GeometryConfig geom(1.1, 0.9);
        const double tp = transmittance_oracle({}, geom, {1.0, 0.65}).T;
        const double tm = transmittance_oracle({}, geom, {1.0, -0.65}).T;
        detail::add_check(out, "detuning-symmetry", std::abs(tp - tm), 1e-12, tol_scale,
                          "T(Delta) = T(-Delta)");
    }
    {  // a full-aperture dipole wave is extinguished on resonance
        const GeometryConfig full(0.5 * constants::pi, 0.5 * constants::pi);
        const IlluminationMode px(Illumination::DipoleX);
        const double t0 = transmittance_oracle(px, full, {1.0, 0.0}).T;
        detail::add_check(out, "dipole-wave-extinction", t0, 1e-10, tol_scale,
                          "T = 0 on resonance for the matched mode");
        const double d = 0.8;
        const double td = transmittance_oracle(px, full, {1.0, d}).T;
        detail::add_check(out, "dipole-wave-line-shape", std::abs(td - dipole_wave_transmittance(d)),
                          1e-10, tol_scale, "T(Delta) = 1 - L(Delta) for the matched mode");
    }
    {  // backward-reflected fraction: bound and the K0/2 rule
        const ReflectanceReport report =
            reflectance_bound_check({0.4, 0.8, 1.2, 0.5 * constants::pi});
        detail::add_check(out, "reflectance-k0-rule", report.max_abs_deviation, 1e-9, tol_scale,
                          "hemispheric R = K0/2 on resonance");
        detail::add_check(out, "reflectance-bound", std::max(0.0, report.max_r_backward - 64.0 / 75.0),
                          1e-9, tol_scale, "R <= 64/75, saturated at full aperture");
    }
    {  // the shadow-boundary transmission dips at an interior aperture
        const ShadowBoundaryMinimum m = shadow_boundary_minimum();
        const double t_edge = std::min(transmittance_closed_form(0.3, 0.3).T,
                                       transmittance_closed_form(0.5 * constants::pi,
                                                                 0.5 * constants::pi).T);
        const double interior =
            (m.alpha > 0.1 && m.alpha < 0.5 * constants::pi - 0.05) ? 0.0 : 1.0;
        detail::add_check(out, "shadow-boundary-interior-minimum",
                          interior + std::max(0.0, m.T - t_edge), 1e-12, tol_scale,
                          "min of T(alpha, alpha) sits strictly inside the aperture range");
    }
    {  // saturation lifts the resonant extinction monotonically
        const GeometryConfig full(0.5 * constants::pi, 0.5 * constants::pi);
        const IlluminationMode px(Illumination::DipoleX);
        double prev = transmittance_oracle_tls(px, full, {{1.0, 0.0}, 0.0}).T;
        double grow = 0.0;
        for (double v : {0.4, 1.0, 2.5}) {
            const double cur = transmittance_oracle_tls(px, full, {{1.0, 0.0}, v}).T;
            grow = std::max(grow, prev - cur);
            prev = cur;
        }
        detail::add_check(out, "saturation-restores-transmission", std::max(0.0, grow), 0.0,
                          tol_scale, "stronger drive weakens the dipole response");
    }
    return out;
}

// --- focal-density bound ----------------------------------------------------

// Total (electric + magnetic) focal energy density against the aperture-free
// bound (W_el + W_mag)(O) <= k^2 P / (3 pi c). The electric half of the bound
// is saturated by the dipole waves at full aperture (K0 = 2 above); the
// total-density ratio peaks at 7/8 for the mixed electric-magnetic mode.
inline std::vector<CheckResult> focal_bound_checks(double tol_scale = 1.0) {
    std::vector<CheckResult> out;
    const std::vector<IlluminationMode> modes = {
        {Illumination::PlaneWave}, {Illumination::DipoleX},
        {Illumination::DipoleZ},   {Illumination::DipolePlusMagnetic}};
    const double k = constants::wavenumber;
    const double bound = k * k / (3.0 * constants::pi * constants::light_speed);

    double over = 0.0;
    double best = 0.0;
    for (const auto& mode : modes) {
        for (double alpha : {0.4, 0.9, 1.3, 0.5 * constants::pi}) {
            const GeometryConfig geom(alpha);
            const double w = focal_energy_density(mode, geom) +
                             focal_magnetic_energy_density(mode, geom);
            const double ratio = w / (bound * incident_power(mode, geom));
            over = std::max(over, ratio - 1.0);
            best = std::max(best, ratio);
        }
    }
    detail::add_check(out, "focal-density-bound", std::max(0.0, over), 1e-10, tol_scale,
                      "(W_el + W_mag)(O) <= k^2 P / (3 pi c) for every mode and aperture");
    detail::add_check(out, "focal-density-peak-ratio", std::abs(best - 0.875), 1e-9, tol_scale,
                      "largest total-density ratio is 7/8 (mixed mode, full aperture)");

    // electric half of the bound: saturated exactly by both dipole waves
    const GeometryConfig full(0.5 * constants::pi);
    double worst = 0.0;
    for (Illumination kind : {Illumination::DipoleX, Illumination::DipoleZ}) {
        const IlluminationMode mode(kind);
        const double w = focal_energy_density(mode, full);
        const double ratio =
            w * 6.0 * constants::pi * constants::light_speed / (k * k * incident_power(mode, full));
        worst = std::max(worst, std::abs(ratio - 1.0));
    }
    detail::add_check(out, "electric-half-bound-saturation", worst, 1e-9, tol_scale,
                      "W_el(O) = k^2 P / (6 pi c) for full-aperture dipole waves");
    return out;
}

inline std::vector<CheckResult> run_all_checks(double tol_scale = 1.0) {
    std::vector<CheckResult> all;
    for (auto group : {numeric_checks, illumination_checks, scattering_checks, multipole_checks,
                       transmittance_checks, focal_bound_checks}) {
        auto part = group(tol_scale);
        all.insert(all.end(), part.begin(), part.end());
    }
    return all;
}

}  // namespace dipscat
