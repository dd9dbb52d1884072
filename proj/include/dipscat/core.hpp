#pragma once

// Core value types, unit system and error taxonomy shared by every module.
//
// Unit system: everything is expressed in wavelength units with
// lambda = 1, c = 1, eps0 = 1 and unit field / focal length (E0 = f = 1),
// so k = 2*pi and all reported observables are dimensionless ratios.

#include <complex>
#include <stdexcept>
#include <string>

namespace dipscat {

using Complex = std::complex<double>;

namespace constants {

inline constexpr double pi = 3.141592653589793238462643383279502884;
inline constexpr double wavelength = 1.0;
inline constexpr double light_speed = 1.0;
inline constexpr double vacuum_permittivity = 1.0;
inline constexpr double wavenumber = 2.0 * pi / wavelength;

// Resonant scattering cross section of an ideal point dipole, 3*lambda^2/(2*pi).
inline constexpr double resonant_cross_section = 3.0 * wavelength * wavelength / (2.0 * pi);

}  // namespace constants

// Raised when an iterative numerical routine stops before reaching the
// requested tolerance. Carries the best estimate and the residual gap so
// callers can decide whether the partial result is still usable.
class accuracy_error : public std::runtime_error {
public:
    accuracy_error(const std::string& what, double estimate, double gap)
        : std::runtime_error(what), estimate_(estimate), gap_(gap) {}

    [[nodiscard]] double estimate() const noexcept { return estimate_; }
    [[nodiscard]] double gap() const noexcept { return gap_; }

private:
    double estimate_;
    double gap_;
};

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    friend Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
    friend Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
    friend Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }
};

inline double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(Vec3 a, Vec3 b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(Vec3 a) { return std::sqrt(dot(a, a)); }

// Complex-amplitude 3-vector (Cartesian components).
struct CVec3 {
    Complex x{0.0, 0.0};
    Complex y{0.0, 0.0};
    Complex z{0.0, 0.0};

    friend CVec3 operator+(const CVec3& a, const CVec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
    friend CVec3 operator-(const CVec3& a, const CVec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
    friend CVec3 operator*(const Complex& s, const CVec3& a) { return {s * a.x, s * a.y, s * a.z}; }
    friend CVec3 operator*(double s, const CVec3& a) { return {s * a.x, s * a.y, s * a.z}; }
};

inline CVec3 to_complex(Vec3 a) { return {Complex(a.x), Complex(a.y), Complex(a.z)}; }

// Hermitian inner product a.conj(b) summed over components.
inline Complex cdot(const CVec3& a, const CVec3& b) {
    return a.x * std::conj(b.x) + a.y * std::conj(b.y) + a.z * std::conj(b.z);
}
inline double norm2(const CVec3& a) { return std::real(cdot(a, a)); }
inline double norm(const CVec3& a) { return std::sqrt(norm2(a)); }

inline Complex cdot(const CVec3& a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

// Magnitude hook used by the generic quadrature driver; overloaded per value type.
inline double integ_norm(double v) { return std::abs(v); }
inline double integ_norm(const Complex& v) { return std::abs(v); }
inline double integ_norm(const CVec3& v) { return norm(v); }

}  // namespace dipscat
