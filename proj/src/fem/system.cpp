#include "mbeam/fem/system.hpp"

namespace mbeam::fem {
namespace {

Eigen::Vector4d element_dofs(const Eigen::VectorXd& u, int e) {
    return {u[2 * e], u[2 * e + 1], u[2 * e + 2], u[2 * e + 3]};
}

}  // namespace

std::vector<std::array<double, kGauss>> curvature_field(const Mesh& mesh,
                                                        const Eigen::VectorXd& u) {
    const double le = mesh.elem_length();
    std::vector<std::array<double, kGauss>> chi(mesh.n_elems);
    for (int e = 0; e < mesh.n_elems; ++e)
        chi[e] = gauss_curvatures(element_dofs(u, e), le);
    return chi;
}

Eigen::MatrixXd assemble_tangent(const Mesh& mesh, const Eigen::VectorXd& u,
                                 const AxialState& axial, const BeamSpec& spec) {
    const double le = mesh.elem_length();
    Eigen::MatrixXd K = Eigen::MatrixXd::Zero(mesh.n_dofs(), mesh.n_dofs());
    for (int e = 0; e < mesh.n_elems; ++e) {
        const auto chi = gauss_curvatures(element_dofs(u, e), le);
        const Eigen::Matrix4d Ke = element_tangent_stiffness(chi, le, axial, spec);
        K.block<4, 4>(2 * e, 2 * e) += Ke;
    }
    return K;
}

Eigen::VectorXd assemble_internal(const Mesh& mesh, const Eigen::VectorXd& u,
                                  const AxialState& axial, const BeamSpec& spec) {
    const double le = mesh.elem_length();
    Eigen::VectorXd f = Eigen::VectorXd::Zero(mesh.n_dofs());
    for (int e = 0; e < mesh.n_elems; ++e) {
        const auto chi = gauss_curvatures(element_dofs(u, e), le);
        f.segment<4>(2 * e) += element_internal_force(chi, le, axial, spec);
    }
    return f;
}

Eigen::MatrixXd assemble_mass(const Mesh& mesh, const BeamSpec& spec) {
    const double le = mesh.elem_length();
    const Eigen::Matrix4d Me = element_mass(spec, le);
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(mesh.n_dofs(), mesh.n_dofs());
    for (int e = 0; e < mesh.n_elems; ++e) M.block<4, 4>(2 * e, 2 * e) += Me;
    return M;
}

Eigen::VectorXd assemble_uniform_load(const Mesh& mesh, double p) {
    const double le = mesh.elem_length();
    const Eigen::Vector4d fe = element_load_vector(p, le);
    Eigen::VectorXd f = Eigen::VectorXd::Zero(mesh.n_dofs());
    for (int e = 0; e < mesh.n_elems; ++e) f.segment<4>(2 * e) += fe;
    return f;
}

void verify_constraints(const Mesh& mesh, const Constraints& constraints,
                        const AxialState& axial, const BeamSpec& spec) {
    const auto free = constraints.free_dofs(mesh.n_dofs());
    if (free.size() == static_cast<std::size_t>(mesh.n_dofs()))
        throw std::invalid_argument("constraint set is empty");
    const Eigen::MatrixXd K0 = reduce(
        assemble_tangent(mesh, Eigen::VectorXd::Zero(mesh.n_dofs()), axial, spec),
        free);
    const Eigen::FullPivLU<Eigen::MatrixXd> lu(K0);
    if (!lu.isInvertible())
        throw std::invalid_argument(
            "constraint configuration leaves the elastic system singular");
}

Eigen::MatrixXd reduce(const Eigen::MatrixXd& full, const std::vector<int>& free) {
    const auto n = static_cast<Eigen::Index>(free.size());
    Eigen::MatrixXd out(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) out(i, j) = full(free[i], free[j]);
    return out;
}

Eigen::VectorXd reduce(const Eigen::VectorXd& full, const std::vector<int>& free) {
    const auto n = static_cast<Eigen::Index>(free.size());
    Eigen::VectorXd out(n);
    for (Eigen::Index i = 0; i < n; ++i) out[i] = full[free[i]];
    return out;
}

Eigen::VectorXd expand(const Eigen::VectorXd& reduced, const std::vector<int>& free,
                       int n_dofs) {
    Eigen::VectorXd out = Eigen::VectorXd::Zero(n_dofs);
    for (std::size_t i = 0; i < free.size(); ++i) out[free[i]] = reduced[i];
    return out;
}

SystemState make_state(const Mesh& mesh, const Constraints& constraints,
                       const Eigen::VectorXd& u, const Eigen::VectorXd& f_ext,
                       const AxialState& axial, const BeamSpec& spec) {
    SystemState st{mesh, constraints, u, curvature_field(mesh, u),
                   assemble_tangent(mesh, u, axial, spec),
                   assemble_mass(mesh, spec),
                   assemble_internal(mesh, u, axial, spec), f_ext};
    return st;
}

}  // namespace mbeam::fem
