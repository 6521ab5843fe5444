#pragma once

#include <array>
#include <vector>

#include <Eigen/Dense>

#include "mbeam/beam_spec.hpp"
#include "mbeam/constitutive.hpp"
#include "mbeam/fem/element.hpp"
#include "mbeam/fem/mesh.hpp"

namespace mbeam::fem {

// Assembled state of the discrete beam. Matrices and vectors are full-size;
// constraints are applied by reduction when solving.
struct SystemState {
    Mesh mesh;
    Constraints constraints;
    Eigen::VectorXd u;  // dof vector, constrained entries zero
    std::vector<std::array<double, kGauss>> gp_curvature;  // chi = -phi_xx per element
    Eigen::MatrixXd K_T;     // tangent stiffness at u, symmetric
    Eigen::MatrixXd M_glob;  // consistent mass, symmetric positive definite
    Eigen::VectorXd f_int;
    Eigen::VectorXd f_ext;
    int newton_iterations = 0;
    double residual = 0.0;
};

std::vector<std::array<double, kGauss>> curvature_field(const Mesh& mesh,
                                                        const Eigen::VectorXd& u);

Eigen::MatrixXd assemble_tangent(const Mesh& mesh, const Eigen::VectorXd& u,
                                 const AxialState& axial, const BeamSpec& spec);
Eigen::VectorXd assemble_internal(const Mesh& mesh, const Eigen::VectorXd& u,
                                  const AxialState& axial, const BeamSpec& spec);
Eigen::MatrixXd assemble_mass(const Mesh& mesh, const BeamSpec& spec);
Eigen::VectorXd assemble_uniform_load(const Mesh& mesh, double p);

// Rejects constraint sets that leave the reduced elastic system singular
// (rigid-body modes unconstrained).
void verify_constraints(const Mesh& mesh, const Constraints& constraints,
                        const AxialState& axial, const BeamSpec& spec);

// Row/column elimination helpers for the reduced (free-dof) system.
Eigen::MatrixXd reduce(const Eigen::MatrixXd& full, const std::vector<int>& free);
Eigen::VectorXd reduce(const Eigen::VectorXd& full, const std::vector<int>& free);
Eigen::VectorXd expand(const Eigen::VectorXd& reduced, const std::vector<int>& free,
                       int n_dofs);

// Fully assembled state for a given dof vector; no equilibrium solve.
SystemState make_state(const Mesh& mesh, const Constraints& constraints,
                       const Eigen::VectorXd& u, const Eigen::VectorXd& f_ext,
                       const AxialState& axial, const BeamSpec& spec);

}  // namespace mbeam::fem
