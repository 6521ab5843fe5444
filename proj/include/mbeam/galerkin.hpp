#pragma once

#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "mbeam/beam_spec.hpp"
#include "mbeam/constitutive.hpp"

namespace mbeam {

// Equilibrium curvature field over the span, plus the abscissae where |chi|
// crosses the elastic limit. Quadrature is split at those points: the tangent
// modulus has a kink there.
struct CurvatureProfile {
    std::function<double(double)> eval;  // x in [0, L] -> chi(x) (1/m)
    std::vector<double> breakpoints;     // sorted, within [0, L]
};

struct GalerkinReduction {
    double omega2;  // squared fundamental angular frequency (rad^2/s^2)
    std::vector<std::pair<double, double>> samples;  // diagnostic (x, f'(chi(x)))
};

// Single-mode reduction of the small oscillations about the given equilibrium
// curvature field, for a simply supported beam:
//
//   omega^2 = (2 pi^4 / L^5) * int_0^L sin^2(pi x / L) f'(chi(x)) dx
//
// Absolute quadrature tolerance 1e-10 * c^2 * pi^4 / L^4 on omega^2.
GalerkinReduction galerkin_frequency(const CurvatureProfile& profile,
                                     const AxialState& axial, const BeamSpec& spec);

// Build the curvature field equilibrating a bending-moment field through the
// inverse section law. Elastic-limit crossings are located by a scan seeded
// with the optional hints and refined by bisection to 1e-12*L. Throws
// limit_moment_error (with the offending abscissa) if the moment reaches the
// section capacity anywhere on the scan.
CurvatureProfile profile_from_moment(const std::function<double(double)>& moment,
                                     const AxialState& axial, const BeamSpec& spec,
                                     std::span<const double> hints = {});

}  // namespace mbeam
