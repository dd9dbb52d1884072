// Focal-spot structure of an aplanatic lens at full aperture: radial profile
// of the axial energy flux and electric energy density, including the ring
// where the flux runs backward.

#include <cstdio>

#include "dipscat/dipscat.hpp"

int main() {
    using namespace dipscat;

    const GeometryConfig geom(0.5 * constants::pi);
    std::printf("# focal-plane profile, x in wavelengths (phi = 0 slice)\n");
    std::printf("# x       S_z         W_el\n");
    double s_min = 1.0;
    double s_min_x = 0.0;
    for (double x = 0.0; x <= 1.201; x += 0.05) {
        const FocalFieldSample s = focal_plane_profile(geom, x);
        std::printf("  %.2f    %+.6f   %.6f\n", x, s.S_z, s.W_el);
        if (s.S_z < s_min) {
            s_min = s.S_z;
            s_min_x = x;
        }
    }
    std::printf("\nbackward axial flux: min S_z = %+.6f at x = %.2f\n", s_min, s_min_x);

    // the effective focal area, two independent ways
    const double from_energy = effective_area(IlluminationMode(), geom);
    const double from_flux = effective_area_focal_plane(geom, 120.0);
    std::printf("effective area: %.6f (energy density), %.6f (focal-plane flux)\n", from_energy,
                from_flux);
    std::printf("half the resonant cross section: %.6f\n",
                0.5 * constants::resonant_cross_section);
    return 0;
}
