#pragma once

// Focusing geometry: an aplanatic system of focal length f whose exit pupil
// subtends the half-angle alpha at the focus, plus the collection half-angle
// beta used by transmission/reflection observables.

#include <cmath>
#include <stdexcept>

#include "core.hpp"

namespace dipscat {

inline constexpr double min_half_angle = 1e-3;  // degenerate cones rejected below this

struct GeometryConfig {
    double alpha;            // focusing half-angle, [min_half_angle, pi/2]
    double beta;             // collection half-angle, same range
    double focal_length;     // > 0
    double aperture_radius;  // = focal_length * sin(alpha)

    GeometryConfig(double alpha_, double beta_ = 0.5 * constants::pi, double focal_length_ = 1.0)
        : alpha(alpha_),
          beta(beta_),
          focal_length(focal_length_),
          aperture_radius(focal_length_ * std::sin(alpha_)) {
        validate();
    }

    GeometryConfig(double alpha_, double beta_, double focal_length_, double aperture_radius_)
        : alpha(alpha_), beta(beta_), focal_length(focal_length_), aperture_radius(aperture_radius_) {
        validate();
        if (std::abs(aperture_radius - focal_length * std::sin(alpha)) > 1e-12) {
            throw std::invalid_argument("GeometryConfig: aperture_radius must equal f*sin(alpha)");
        }
    }

private:
    void validate() const {
        const double half_pi = 0.5 * constants::pi;
        if (!(alpha >= min_half_angle && alpha <= half_pi)) {
            throw std::invalid_argument("GeometryConfig: alpha outside [1e-3, pi/2]");
        }
        if (!(beta >= min_half_angle && beta <= half_pi)) {
            throw std::invalid_argument("GeometryConfig: beta outside [1e-3, pi/2]");
        }
        if (!(focal_length > 0.0)) {
            throw std::invalid_argument("GeometryConfig: focal_length must be > 0");
        }
    }
};

}  // namespace dipscat
