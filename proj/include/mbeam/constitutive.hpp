#pragma once

#include <limits>
#include <stdexcept>
#include <string>

#include "mbeam/beam_spec.hpp"

namespace mbeam {

enum class Regime { elastic, cracked };

// Section response at a given curvature: generalized moment f = M/(rho*b*h),
// the physical bending moment, and the tangent df/dchi.
struct SectionResponse {
    double f;       // generalized moment (m^3/s^2)
    double M;       // bending moment (N*m)
    double fprime;  // tangent df/dchi (m^4/s^2)
    Regime regime;
};

// Raised when a requested moment reaches the section capacity |N|h/2
// (generalized moment 3*alpha*c^2), attained only at infinite curvature.
class limit_moment_error : public std::domain_error {
public:
    explicit limit_moment_error(
        const std::string& what,
        double abscissa = std::numeric_limits<double>::quiet_NaN())
        : std::domain_error(what), abscissa_(abscissa) {}

    // Offending abscissa when raised from a field evaluation; NaN otherwise.
    double abscissa() const noexcept { return abscissa_; }

private:
    double abscissa_;
};

// Curvature at which the section leaves the linear elastic range,
// -2N/(E*b*h^2). Rejects tensile or zero N.
double elastic_limit_curvature(double N, const BeamSpec& spec);

// Moment-curvature law of the rectangular no-tension section with unbounded
// compressive strength:
//   f(chi) = c^2 * chi                                        |chi| <= alpha
//   f(chi) = c^2 * alpha * sign(chi) * (3 - 2*sqrt(alpha/|chi|))   otherwise
// The bending moment is bounded by |N|h/2, approached as |chi| -> inf.
SectionResponse generalized_moment(double chi, const AxialState& axial,
                                   const BeamSpec& spec);

// df/dchi: c^2 in the elastic range, c^2*sqrt(alpha^3/|chi|^3) beyond it.
// Continuous across the elastic limit and strictly positive.
double tangent_modulus(double chi, const AxialState& axial, const BeamSpec& spec);

// Inverse of generalized_moment. Requires |fval| < 3*alpha*c^2; throws
// limit_moment_error at or beyond the capacity.
double curvature_from_generalized_moment(double fval, const AxialState& axial,
                                         const BeamSpec& spec);

}  // namespace mbeam
