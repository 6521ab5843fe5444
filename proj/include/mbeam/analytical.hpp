#pragma once

#include <utility>
#include <variant>
#include <vector>

#include "mbeam/beam_spec.hpp"

namespace mbeam {

// Vertical load acting with constant eccentricity e along the axis. N drives
// the finite-element realization (end moments N*e and the elastic limit);
// the closed-form frequency ratio does not depend on it.
struct Case1 {
    double e;  // eccentricity (m)
    double N;  // axial force (N), < 0
};

// Uniform transverse load with centric axial force.
struct Case2 {
    double p;  // transverse load (N/m), >= 0
    double N;  // axial force (N), < 0
};

// Imposed sinusoidal deflection of midspan amplitude A.
struct Case3 {
    double A;  // amplitude (m), >= 0
    double N;  // axial force (N), < 0
};

using LoadCase = std::variant<Case1, Case2, Case3>;

struct ModalResult {
    double omega;  // fundamental angular frequency (rad/s)
    double f_hz;   // omega / (2 pi)
    double ratio;  // omega / omega_el
    double x0;     // crack-front abscissa (m); L/2 when fully elastic
    std::vector<double> mode_shape;  // nodal values, finite-element path only
};

// Fundamental frequency of the uncracked simply supported beam, pi^2 c / L^2.
double omega_elastic(const BeamSpec& spec);

// Constant-eccentricity case. ratio = 1 for |e|/h <= 1/6, then
// (3/4) sqrt(6 (1 - 2|e|/h)^3); reaches 0 at |e| = h/2, beyond which the
// resultant leaves the section and a domain error is thrown.
ModalResult case1_frequency(double e, const BeamSpec& spec);

// First-crack load pbar = 4|N|h/(3L^2) and limit load pbarbar = 3*pbar.
std::pair<double, double> case2_limit_loads(double N, const BeamSpec& spec);

// Crack-front abscissa under uniform load: L/2 below pbar, then
// (L/2)(1 - sqrt(1 - pbar/p)). Throws limit_moment_error beyond pbarbar.
double case2_x0(double p, double N, const BeamSpec& spec);

// Uniform-load case; the frequency ratio depends only on p/pbar.
ModalResult case2_frequency(double p, double N, const BeamSpec& spec);

// Largest imposed amplitude keeping the whole span elastic, alpha L^2 / pi^2.
double case3_threshold(double N, const BeamSpec& spec);

// Crack-front abscissa for an imposed amplitude: L/2 up to the threshold,
// then (L/pi) asin(A_m/A), tending to 0 as A -> inf.
double case3_x0(double A, double N, const BeamSpec& spec);

// Imposed-deformation case; the frequency ratio depends only on A/A_m.
ModalResult case3_frequency(double A, double N, const BeamSpec& spec);

}  // namespace mbeam
