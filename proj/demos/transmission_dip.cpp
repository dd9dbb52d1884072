// Minimal usage example: how much light a single resonant dipole removes
// from a focused beam, as a function of the focusing aperture.

#include <cstdio>

#include "dipscat/dipscat.hpp"

int main() {
    using namespace dipscat;

    std::printf("# transmission of a focused beam past a resonant point dipole\n");
    std::printf("# alpha/pi      T(alpha,alpha)  R(alpha,pi/2)\n");
    for (double frac = 0.10; frac <= 0.501; frac += 0.05) {
        const double alpha = frac * constants::pi;
        const TransmittanceResult on_boundary = transmittance_closed_form(alpha, alpha);
        const TransmittanceResult full = transmittance_closed_form(alpha, 0.5 * constants::pi);
        std::printf("  %.2f          %.6f        %.6f\n", frac, on_boundary.T, full.R);
    }

    const ShadowBoundaryMinimum min = shadow_boundary_minimum();
    std::printf("\ndeepest shadow-boundary dip: T = %.6f at alpha = %.4f pi\n", min.T,
                min.alpha / constants::pi);

    // a pure dipole wave is extinguished completely on resonance
    const GeometryConfig full_aperture(0.5 * constants::pi, 0.5 * constants::pi);
    const TransmittanceResult ideal = transmittance_oracle(
        IlluminationMode(Illumination::DipoleX), full_aperture, OscillatorParams(1.0, 0.0));
    std::printf("ideal dipole-wave illumination: T = %.2e, R = %.6f\n", ideal.T, ideal.R);
    return 0;
}
