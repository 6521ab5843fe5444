#pragma once

#include <vector>

#include <Eigen/Dense>

#include "mbeam/analytical.hpp"
#include "mbeam/fem/system.hpp"

namespace mbeam::fem {

struct EigenPair {
    double omega2;          // eigenvalue (rad^2/s^2)
    Eigen::VectorXd shape;  // mass-normalized, deterministic sign
};

// Lowest n eigenpairs of K phi = lambda M phi for symmetric K and symmetric
// positive definite M: factor M = L L^T, transform to the standard symmetric
// problem L^-1 K L^-T, solve, back-substitute the shapes. Eigenvalues
// ascending. Throws if M cannot be factored.
std::vector<EigenPair> solve_generalized_symmetric_eig(const Eigen::MatrixXd& K,
                                                       const Eigen::MatrixXd& M,
                                                       int n);

// Modal analysis about the given state using its tangent stiffness. Shapes
// come back on the full dof set with constrained entries zero. An indefinite
// tangent (past the limit state) is reported through a negative leading
// omega2, not an error.
std::vector<EigenPair> modal_analysis(const SystemState& state, int n_modes);

// Fundamental-mode summary: frequency, ratio to the elastic reference, crack
// front, nodal mode shape.
ModalResult fundamental_mode(const SystemState& state, const BeamSpec& spec,
                             const AxialState& axial);

}  // namespace mbeam::fem
