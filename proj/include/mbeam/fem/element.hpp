#pragma once

#include <array>

#include <Eigen/Dense>

#include "mbeam/beam_spec.hpp"
#include "mbeam/constitutive.hpp"

namespace mbeam::fem {

inline constexpr int kGauss = 4;  // Gauss points per element

// Cubic Hermite shape functions on [0, le], dof order
// (phi_0, phi_x_0, phi_1, phi_x_1).
struct HermiteBasis {
    std::array<double, 4> value;
    std::array<double, 4> second;
};

// Values and second derivatives at a local coordinate xi in [0, le];
// coordinates outside the element are rejected.
HermiteBasis hermite_basis(double xi, double le);

// Element Gauss rule: abscissae on [0, le] and matching weights.
std::array<double, kGauss> gauss_abscissae(double le);
std::array<double, kGauss> gauss_weights(double le);

// Curvature chi = -phi_xx at the Gauss points of an element with dof
// vector u_e.
std::array<double, kGauss> gauss_curvatures(const Eigen::Vector4d& u_e, double le);

// (EJ/c^2) sum_g w_g Psi''_g Psi''_g^T f'(chi_g). Reduces to the classical
// elastic beam stiffness when all Gauss curvatures are within the elastic
// limit; symmetric by construction.
Eigen::Matrix4d element_tangent_stiffness(const std::array<double, kGauss>& gp_chi,
                                          double le, const AxialState& axial,
                                          const BeamSpec& spec);

// Internal force work-conjugate to the element dofs. In the elastic regime
// equals the elastic stiffness times the dof vector.
Eigen::Vector4d element_internal_force(const std::array<double, kGauss>& gp_chi,
                                       double le, const AxialState& axial,
                                       const BeamSpec& spec);

// Consistent load vector for a uniform transverse load p:
// (p le/2, p le^2/12, p le/2, -p le^2/12).
Eigen::Vector4d element_load_vector(double p, double le);

// Consistent mass rho*b*h int Psi Psi^T dxi.
Eigen::Matrix4d element_mass(const BeamSpec& spec, double le);

}  // namespace mbeam::fem
