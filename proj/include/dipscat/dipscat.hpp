#pragma once

// Umbrella header: focused-beam illumination, point-dipole scattering, and
// the transmission/reflection observables built from them, plus the table
// and command plumbing of the CLI.

#include "bessel.hpp"
#include "checks.hpp"
#include "core.hpp"
#include "geometry.hpp"
#include "illumination.hpp"
#include "multipole.hpp"
#include "quadrature.hpp"
#include "runner.hpp"
#include "scattering.hpp"
#include "tables.hpp"
#include "transmittance.hpp"
