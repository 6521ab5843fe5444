#include "mbeam/constitutive.hpp"

#include <cmath>

namespace mbeam {

double elastic_limit_curvature(double N, const BeamSpec& spec) {
    if (N >= 0.0)
        throw std::domain_error(
            "axial force must be compressive (N < 0); tension or zero is unsupported");
    return -2.0 * N / (spec.E * spec.b * spec.h * spec.h);
}

SectionResponse generalized_moment(double chi, const AxialState& axial,
                                   const BeamSpec& spec) {
    const double a = axial.alpha;
    const double c2 = spec.c2;
    SectionResponse r{};
    if (std::fabs(chi) <= a) {
        r.f = c2 * chi;
        r.fprime = c2;
        r.regime = Regime::elastic;
    } else {
        const double q = a / std::fabs(chi);  // in (0, 1)
        r.f = std::copysign(c2 * a * (3.0 - 2.0 * std::sqrt(q)), chi);
        r.fprime = c2 * q * std::sqrt(q);
        r.regime = Regime::cracked;
    }
    r.M = spec.rho * spec.b * spec.h * r.f;
    return r;
}

double tangent_modulus(double chi, const AxialState& axial, const BeamSpec& spec) {
    const double a = axial.alpha;
    if (std::fabs(chi) <= a) return spec.c2;
    const double q = a / std::fabs(chi);
    return spec.c2 * q * std::sqrt(q);
}

double curvature_from_generalized_moment(double fval, const AxialState& axial,
                                         const BeamSpec& spec) {
    const double a = axial.alpha;
    const double c2 = spec.c2;
    const double f_limit = 3.0 * a * c2;
    const double mag = std::fabs(fval);
    if (mag >= f_limit)
        throw limit_moment_error(
            "generalized moment at or beyond the section capacity 3*alpha*c^2");
    if (mag <= a * c2) return fval / c2;
    const double d = mag - f_limit;  // < 0
    return std::copysign(4.0 * a * a * a * c2 * c2 / (d * d), fval);
}

}  // namespace mbeam
