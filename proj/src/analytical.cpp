#include "mbeam/analytical.hpp"

#include <cmath>
#include <numbers>

#include "mbeam/constitutive.hpp"
#include "mbeam/quadrature.hpp"

namespace mbeam {
namespace {

constexpr double kPi = std::numbers::pi;

ModalResult from_ratio(double ratio, double x0, const BeamSpec& spec) {
    ModalResult r;
    r.ratio = ratio;
    r.omega = ratio * omega_elastic(spec);
    r.f_hz = r.omega / (2.0 * kPi);
    r.x0 = x0;
    return r;
}

}  // namespace

double omega_elastic(const BeamSpec& spec) {
    return kPi * kPi * std::sqrt(spec.c2) / (spec.L * spec.L);
}

ModalResult case1_frequency(double e, const BeamSpec& spec) {
    const double ecc = std::fabs(e) / spec.h;
    if (ecc > 0.5)
        throw std::domain_error(
            "eccentricity puts the resultant outside the section: |e| must be <= h/2");
    if (ecc <= 1.0 / 6.0) return from_ratio(1.0, spec.L / 2.0, spec);
    const double t = 1.0 - 2.0 * ecc;
    return from_ratio(0.75 * std::sqrt(6.0 * t * t * t), 0.0, spec);
}

std::pair<double, double> case2_limit_loads(double N, const BeamSpec& spec) {
    elastic_limit_curvature(N, spec);  // validates N < 0
    const double pbar = 4.0 * std::fabs(N) * spec.h / (3.0 * spec.L * spec.L);
    return {pbar, 3.0 * pbar};
}

double case2_x0(double p, double N, const BeamSpec& spec) {
    const auto [pbar, pbarbar] = case2_limit_loads(N, spec);
    if (p < 0.0) throw std::domain_error("transverse load must be non-negative");
    if (p > pbarbar)
        throw limit_moment_error("transverse load beyond the limit load 4|N|h/L^2");
    if (p < pbar) return spec.L / 2.0;
    return 0.5 * spec.L * (1.0 - std::sqrt(1.0 - pbar / p));
}

ModalResult case2_frequency(double p, double N, const BeamSpec& spec) {
    const auto [pbar, pbarbar] = case2_limit_loads(N, spec);
    if (p < 0.0) throw std::domain_error("transverse load must be non-negative");
    if (p > pbarbar)
        throw limit_moment_error("transverse load beyond the limit load 4|N|h/L^2");
    if (p < pbar) return from_ratio(1.0, spec.L / 2.0, spec);

    const double r = p / pbar;
    const double x0 = case2_x0(p, N, spec);
    const double y0 = x0 / spec.L;
    auto elastic = [](double y) {
        const double s = std::sin(kPi * y);
        return s * s;
    };
    auto cracked = [r](double y) {
        const double s = std::sin(kPi * y);
        const double g = std::fabs(r * (y - y * y) - 0.75);
        return s * s * g * g * g;
    };
    const double tol = 1e-10;
    const double ratio2 = 4.0 * (integrate(elastic, 0.0, y0, tol / 8.0) +
                                 8.0 * integrate(cracked, y0, 0.5, tol / 64.0));
    return from_ratio(std::sqrt(std::max(ratio2, 0.0)), x0, spec);
}

double case3_threshold(double N, const BeamSpec& spec) {
    const double alpha = elastic_limit_curvature(N, spec);
    return alpha * spec.L * spec.L / (kPi * kPi);
}

double case3_x0(double A, double N, const BeamSpec& spec) {
    const double A_m = case3_threshold(N, spec);
    if (A <= A_m) return spec.L / 2.0;
    return spec.L / kPi * std::asin(A_m / A);
}

ModalResult case3_frequency(double A, double N, const BeamSpec& spec) {
    if (A < 0.0) throw std::domain_error("imposed amplitude must be non-negative");
    const double A_m = case3_threshold(N, spec);
    if (A <= A_m) return from_ratio(1.0, spec.L / 2.0, spec);

    const double m = A_m / A;  // in (0, 1)
    const double y0 = std::asin(m) / kPi;
    auto cracked = [m](double y) { return std::sqrt(m * m * m * std::sin(kPi * y)); };
    const double tol = 1e-10;
    const double ratio2 =
        2.0 * (y0 - (m / kPi) * std::sqrt(1.0 - m * m) +
               integrate(cracked, y0, 1.0 - y0, tol / 4.0));
    return from_ratio(std::sqrt(std::max(ratio2, 0.0)), y0 * spec.L, spec);
}

}  // namespace mbeam
