#include "mbeam/galerkin.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "mbeam/quadrature.hpp"

namespace mbeam {
namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

GalerkinReduction galerkin_frequency(const CurvatureProfile& profile,
                                     const AxialState& axial, const BeamSpec& spec) {
    const double L = spec.L;
    auto integrand = [&](double x) {
        const double chi = profile.eval(x);
        if (!std::isfinite(chi))
            throw std::domain_error("curvature profile produced a non-finite sample");
        const double s = std::sin(kPi * x / L);
        return s * s * tangent_modulus(chi, axial, spec);
    };

    const double pi4 = kPi * kPi * kPi * kPi;
    const double L4 = L * L * L * L;
    const double omega2_tol = 1e-10 * spec.c2 * pi4 / L4;
    const double integral_tol = omega2_tol * L4 * L / (2.0 * pi4);
    const double integral =
        integrate_split(integrand, 0.0, L, profile.breakpoints, integral_tol);

    GalerkinReduction out;
    out.omega2 = 2.0 * pi4 / (L4 * L) * integral;
    constexpr int kSamples = 33;
    out.samples.reserve(kSamples);
    for (int i = 0; i < kSamples; ++i) {
        const double x = L * i / (kSamples - 1);
        out.samples.emplace_back(x, tangent_modulus(profile.eval(x), axial, spec));
    }
    return out;
}

CurvatureProfile profile_from_moment(const std::function<double(double)>& moment,
                                     const AxialState& axial, const BeamSpec& spec,
                                     std::span<const double> hints) {
    const double L = spec.L;
    const double rbh = spec.rho * spec.b * spec.h;
    const double m_alpha = rbh * spec.c2 * axial.alpha;  // moment at the elastic limit
    const double m_limit = 3.0 * m_alpha;                // section capacity

    auto excess = [&](double x) { return std::fabs(moment(x)) - m_alpha; };

    constexpr int kScan = 512;
    std::vector<double> grid;
    grid.reserve(kScan + 1 + hints.size());
    for (int i = 0; i <= kScan; ++i)
        grid.push_back(i == kScan ? L : L * i / kScan);
    for (double x : hints)
        if (x > 0.0 && x < L) grid.push_back(x);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    for (double x : grid)
        if (std::fabs(moment(x)) >= m_limit)
            throw limit_moment_error("bending moment reaches the section capacity", x);

    const double x_tol = 1e-12 * L;
    std::vector<double> breakpoints;
    double g_prev = excess(grid.front());
    for (std::size_t i = 1; i < grid.size(); ++i) {
        double g_next = excess(grid[i]);
        if (g_prev == 0.0) {
            breakpoints.push_back(grid[i - 1]);
        } else if (g_prev * g_next < 0.0) {
            double lo = grid[i - 1], hi = grid[i];
            double g_lo = g_prev;
            while (hi - lo > x_tol) {
                const double mid = 0.5 * (lo + hi);
                const double g_mid = excess(mid);
                if (g_mid == 0.0) {
                    lo = hi = mid;
                    break;
                }
                if (g_lo * g_mid < 0.0) {
                    hi = mid;
                } else {
                    lo = mid;
                    g_lo = g_mid;
                }
            }
            breakpoints.push_back(0.5 * (lo + hi));
        }
        g_prev = g_next;
    }
    if (g_prev == 0.0) breakpoints.push_back(grid.back());
    breakpoints.erase(std::unique(breakpoints.begin(), breakpoints.end()),
                      breakpoints.end());

    CurvatureProfile profile;
    profile.breakpoints = std::move(breakpoints);
    profile.eval = [moment, axial, spec, rbh](double x) {
        return curvature_from_generalized_moment(moment(x) / rbh, axial, spec);
    };
    return profile;
}

}  // namespace mbeam
