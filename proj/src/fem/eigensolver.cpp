#include "mbeam/fem/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mbeam/fem/solver.hpp"

namespace mbeam::fem {

std::vector<EigenPair> solve_generalized_symmetric_eig(const Eigen::MatrixXd& K,
                                                       const Eigen::MatrixXd& M,
                                                       int n) {
    if (K.rows() != K.cols() || M.rows() != M.cols() || K.rows() != M.rows())
        throw std::invalid_argument("stiffness and mass dimensions do not match");
    if (n < 1) throw std::invalid_argument("at least one mode must be requested");

    const Eigen::LLT<Eigen::MatrixXd> llt(M);
    if (llt.info() != Eigen::Success)
        throw std::runtime_error("mass matrix is not positive definite");

    // A = L^-1 K L^-T, symmetrized against rounding before the solve.
    Eigen::MatrixXd A = llt.matrixL().solve(K);
    A = llt.matrixL().solve(A.transpose()).transpose();
    A = (0.5 * (A + A.transpose())).eval();

    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(A);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("symmetric eigensolve did not converge");

    const int count = std::min<int>(n, static_cast<int>(K.rows()));
    std::vector<EigenPair> out;
    out.reserve(count);
    for (int k = 0; k < count; ++k) {
        Eigen::VectorXd shape = llt.matrixU().solve(es.eigenvectors().col(k));
        shape /= std::sqrt(shape.dot(M * shape));
        Eigen::Index imax;
        shape.cwiseAbs().maxCoeff(&imax);
        if (shape[imax] < 0.0) shape = -shape;
        out.push_back({es.eigenvalues()[k], std::move(shape)});
    }
    return out;
}

std::vector<EigenPair> modal_analysis(const SystemState& state, int n_modes) {
    const auto free = state.constraints.free_dofs(state.mesh.n_dofs());
    auto pairs = solve_generalized_symmetric_eig(reduce(state.K_T, free),
                                                 reduce(state.M_glob, free), n_modes);
    for (auto& pair : pairs)
        pair.shape = expand(pair.shape, free, state.mesh.n_dofs());
    return pairs;
}

ModalResult fundamental_mode(const SystemState& state, const BeamSpec& spec,
                             const AxialState& axial) {
    const auto pairs = modal_analysis(state, 1);
    const double omega2 = pairs.front().omega2;

    ModalResult result;
    result.omega = omega2 > 0.0 ? std::sqrt(omega2) : 0.0;
    result.f_hz = result.omega / (2.0 * std::numbers::pi);
    result.ratio = result.omega / omega_elastic(spec);
    result.x0 = crack_front(state, axial);
    result.mode_shape.reserve(state.mesh.n_nodes());
    for (int i = 0; i < state.mesh.n_nodes(); ++i)
        result.mode_shape.push_back(pairs.front().shape[2 * i]);
    return result;
}

}  // namespace mbeam::fem
