#pragma once

#include <functional>
#include <span>

namespace mbeam {

// Adaptive Gauss-Kronrod (7-15) integration of f over [a, b] to an absolute
// tolerance.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol);

// Same, with the interval pre-split at the given sorted breakpoints
// (abscissae where the integrand is non-smooth).
double integrate_split(const std::function<double(double)>& f, double a, double b,
                       std::span<const double> breakpoints, double abs_tol);

}  // namespace mbeam
