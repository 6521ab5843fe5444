#include "mbeam/fem/element.hpp"

#include <cmath>
#include <stdexcept>

namespace mbeam::fem {
namespace {

// 4-point Gauss rule mapped to [0, 1]; exact through degree 7, which covers
// the elastic Psi'' Psi''^T (quadratic) and the consistent mass (sextic).
constexpr double kP1 = 0.3399810435848563;
constexpr double kP2 = 0.8611363115940526;
constexpr double kW1 = 0.6521451548625461;
constexpr double kW2 = 0.3478548451374538;
constexpr double kEta[kGauss] = {0.5 - 0.5 * kP2, 0.5 - 0.5 * kP1,
                                 0.5 + 0.5 * kP1, 0.5 + 0.5 * kP2};
constexpr double kW01[kGauss] = {0.5 * kW2, 0.5 * kW1, 0.5 * kW1, 0.5 * kW2};

}  // namespace

HermiteBasis hermite_basis(double xi, double le) {
    if (xi < 0.0 || xi > le)
        throw std::domain_error("local coordinate outside the element");
    const double t = xi / le;
    const double t2 = t * t;
    const double t3 = t2 * t;
    HermiteBasis basis;
    basis.value = {1.0 - 3.0 * t2 + 2.0 * t3, le * (t - 2.0 * t2 + t3),
                   3.0 * t2 - 2.0 * t3, le * (t3 - t2)};
    const double inv_le2 = 1.0 / (le * le);
    basis.second = {(-6.0 + 12.0 * t) * inv_le2, (-4.0 + 6.0 * t) / le,
                    (6.0 - 12.0 * t) * inv_le2, (-2.0 + 6.0 * t) / le};
    return basis;
}

std::array<double, kGauss> gauss_abscissae(double le) {
    return {kEta[0] * le, kEta[1] * le, kEta[2] * le, kEta[3] * le};
}

std::array<double, kGauss> gauss_weights(double le) {
    return {kW01[0] * le, kW01[1] * le, kW01[2] * le, kW01[3] * le};
}

std::array<double, kGauss> gauss_curvatures(const Eigen::Vector4d& u_e, double le) {
    std::array<double, kGauss> chi{};
    const auto xi = gauss_abscissae(le);
    for (int g = 0; g < kGauss; ++g) {
        const HermiteBasis basis = hermite_basis(xi[g], le);
        double phi_xx = 0.0;
        for (int i = 0; i < 4; ++i) phi_xx += basis.second[i] * u_e[i];
        chi[g] = -phi_xx;
    }
    return chi;
}

Eigen::Matrix4d element_tangent_stiffness(const std::array<double, kGauss>& gp_chi,
                                          double le, const AxialState& axial,
                                          const BeamSpec& spec) {
    const double scale = spec.E * spec.J / spec.c2;  // = rho*b*h
    const auto xi = gauss_abscissae(le);
    const auto w = gauss_weights(le);
    Eigen::Matrix4d K = Eigen::Matrix4d::Zero();
    for (int g = 0; g < kGauss; ++g) {
        const HermiteBasis basis = hermite_basis(xi[g], le);
        const double coeff = scale * w[g] * tangent_modulus(gp_chi[g], axial, spec);
        for (int i = 0; i < 4; ++i)
            for (int j = i; j < 4; ++j) {
                const double kij = coeff * basis.second[i] * basis.second[j];
                K(i, j) += kij;
                if (i != j) K(j, i) += kij;
            }
    }
    return K;
}

Eigen::Vector4d element_internal_force(const std::array<double, kGauss>& gp_chi,
                                       double le, const AxialState& axial,
                                       const BeamSpec& spec) {
    const double scale = spec.E * spec.J / spec.c2;
    const auto xi = gauss_abscissae(le);
    const auto w = gauss_weights(le);
    Eigen::Vector4d fi = Eigen::Vector4d::Zero();
    for (int g = 0; g < kGauss; ++g) {
        const HermiteBasis basis = hermite_basis(xi[g], le);
        // chi = -phi_xx: the virtual curvature of dof i is -Psi''_i.
        const double coeff =
            -scale * w[g] * generalized_moment(gp_chi[g], axial, spec).f;
        for (int i = 0; i < 4; ++i) fi[i] += coeff * basis.second[i];
    }
    return fi;
}

Eigen::Vector4d element_load_vector(double p, double le) {
    return {p * le / 2.0, p * le * le / 12.0, p * le / 2.0, -p * le * le / 12.0};
}

Eigen::Matrix4d element_mass(const BeamSpec& spec, double le) {
    const double m = spec.rho * spec.b * spec.h * le / 420.0;
    const double le2 = le * le;
    Eigen::Matrix4d M;
    M << 156.0, 22.0 * le, 54.0, -13.0 * le,
        22.0 * le, 4.0 * le2, 13.0 * le, -3.0 * le2,
        54.0, 13.0 * le, 156.0, -22.0 * le,
        -13.0 * le, -3.0 * le2, -22.0 * le, 4.0 * le2;
    return m * M;
}

}  // namespace mbeam::fem
