#pragma once

// Point-dipole scatterer: Lorentzian response of a classical oscillator and
// of a weakly driven two-level system, cross sections and far fields.
//
// The oscillator at detuning Delta = w - w0 with linewidth Gamma scatters an
// incident focal field E_inc(O) (linearly polarized along the oscillator
// axis) into the transverse dipole far field
//
//   E_sca(r) = - 3 Gamma / (2 (2 Delta + i Gamma)) * E_inc(O)
//              * e^{i k r} / (k r) * (e_p - (e_p.r_hat) r_hat),
//
// outgoing waves carrying e^{+ikr}. On resonance the prefactor is +3i/2:
// the +pi/2 Lorentzian phase that, together with the -pi/2 Gouy phase of a
// focused wave, produces the net pi of a perfect mirror.

#include <cmath>
#include <stdexcept>

#include "core.hpp"

namespace dipscat {

struct OscillatorParams {
    double gamma;     // linewidth, > 0
    double detuning;  // w - w0, same units as gamma

    OscillatorParams(double gamma_, double detuning_ = 0.0) : gamma(gamma_), detuning(detuning_) {
        if (!(gamma > 0.0)) {
            throw std::invalid_argument("OscillatorParams: gamma must be > 0");
        }
        if (!std::isfinite(detuning)) {
            throw std::invalid_argument("OscillatorParams: detuning must be finite");
        }
    }
};

struct TlsParams {
    OscillatorParams oscillator;
    double rabi;  // |V| >= 0, stored as a real magnitude

    TlsParams(OscillatorParams osc, double rabi_) : oscillator(osc), rabi(rabi_) {
        if (!(rabi >= 0.0)) {
            throw std::invalid_argument("TlsParams: rabi must be >= 0");
        }
    }
};

// Rabi frequency magnitude from a transition dipole moment, a field
// amplitude and the angle between them (hbar = 1 here).
inline double rabi_frequency(double dipole_moment, double field_amplitude, double angle) {
    if (!(dipole_moment >= 0.0) || !(field_amplitude >= 0.0)) {
        throw std::invalid_argument("rabi_frequency: magnitudes must be >= 0");
    }
    return dipole_moment * field_amplitude * std::abs(std::cos(angle));
}

// Lorentzian extinction cross section sigma0 Gamma^2 / (4 Delta^2 + Gamma^2).
inline double cross_section(const OscillatorParams& p) {
    const double g2 = p.gamma * p.gamma;
    return constants::resonant_cross_section * g2 / (4.0 * p.detuning * p.detuning + g2);
}

// Saturation-broadened cross section of a two-level system,
// sigma0 Gamma^2 / (4 Delta^2 + Gamma^2 + 2 V^2); equals the classical form
// as V -> 0.
inline double cross_section_tls(const TlsParams& p) {
    const double g2 = p.oscillator.gamma * p.oscillator.gamma;
    return constants::resonant_cross_section * g2 /
           (4.0 * p.oscillator.detuning * p.oscillator.detuning + g2 + 2.0 * p.rabi * p.rabi);
}

// Complex response weight l(Delta) = Gamma / (Gamma - 2 i Delta).
// Key identity: Re l = |l|^2 = Gamma^2 / (Gamma^2 + 4 Delta^2), which is why
// interference and scattered-power terms scale by the same Lorentzian.
inline Complex lorentzian_weight(const OscillatorParams& p) {
    return p.gamma / Complex(p.gamma, -2.0 * p.detuning);
}

enum class DipoleAxis { X, Z };

// Dimensionless scattered amplitude -3 Gamma / (2 (2 Delta + i Gamma)); its
// modulus is bounded by 3/2 (reached on resonance).
struct ScatteredField {
    Complex amplitude;
    DipoleAxis polarization_axis = DipoleAxis::X;
};

inline ScatteredField scattering_amplitude(const OscillatorParams& p,
                                           DipoleAxis axis = DipoleAxis::X) {
    return {-3.0 * p.gamma / (2.0 * Complex(2.0 * p.detuning, p.gamma)), axis};
}

// Weak-drive coherent amplitude of a two-level system,
// -3 Gamma (Delta - i Gamma/2) / (4 Delta^2 + Gamma^2 + 2 V^2);
// reduces to the classical amplitude as V -> 0.
inline ScatteredField scattering_amplitude_tls(const TlsParams& p,
                                               DipoleAxis axis = DipoleAxis::X) {
    const OscillatorParams& o = p.oscillator;
    const Complex num = -3.0 * o.gamma * Complex(o.detuning, -0.5 * o.gamma);
    const double den = 4.0 * o.detuning * o.detuning + o.gamma * o.gamma + 2.0 * p.rabi * p.rabi;
    return {num / den, axis};
}

namespace detail {

inline Vec3 axis_vector(DipoleAxis axis) {
    return axis == DipoleAxis::X ? Vec3{1.0, 0.0, 0.0} : Vec3{0.0, 0.0, 1.0};
}

// Transverse projector applied to the dipole axis: e_p - (e_p.r_hat) r_hat.
inline Vec3 transverse_pattern(DipoleAxis axis, Vec3 r_hat) {
    const Vec3 e_p = axis_vector(axis);
    const double along = dot(e_p, r_hat);
    return e_p - along * r_hat;
}

}  // namespace detail

// Scattered far field at direction r_hat and radial phase kr (>= 100; the
// expression is the leading 1/kr term and is not valid closer in).
inline CVec3 scattered_far_field(const OscillatorParams& p, Complex e_inc_at_focus, Vec3 r_hat,
                                 double kr, DipoleAxis axis = DipoleAxis::X) {
    if (!(kr >= 100.0)) {
        throw std::domain_error("scattered_far_field: far-field form requires kr >= 100");
    }
    const ScatteredField amp = scattering_amplitude(p, axis);
    const Complex scale = amp.amplitude * e_inc_at_focus * std::exp(Complex(0.0, kr)) / kr;
    return scale * to_complex(detail::transverse_pattern(axis, r_hat));
}

// Same far field with the saturation-corrected two-level amplitude.
inline CVec3 coherent_scattered_field_tls(const TlsParams& p, Complex e_inc_at_focus, Vec3 r_hat,
                                          double kr, DipoleAxis axis = DipoleAxis::X) {
    if (!(kr >= 100.0)) {
        throw std::domain_error("coherent_scattered_field_tls: far-field form requires kr >= 100");
    }
    const ScatteredField amp = scattering_amplitude_tls(p, axis);
    const Complex scale = amp.amplitude * e_inc_at_focus * std::exp(Complex(0.0, kr)) / kr;
    return scale * to_complex(detail::transverse_pattern(axis, r_hat));
}

}  // namespace dipscat
