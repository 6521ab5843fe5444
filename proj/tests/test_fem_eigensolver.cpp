#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "mbeam/fem/eigensolver.hpp"
#include "mbeam/fem/solver.hpp"
#include "oracles.hpp"

using namespace mbeam;
using namespace mbeam::fem;

namespace {

const BeamSpec kBeam(6.0, 0.4, 1.0, 3e9, 1800.0);
const double kN = -500000.0;

Eigen::MatrixXd random_spd(int n, std::mt19937& rng, double shift) {
    std::normal_distribution<double> g(0.0, 1.0);
    Eigen::MatrixXd A(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) A(i, j) = g(rng);
    return A * A.transpose() + shift * Eigen::MatrixXd::Identity(n, n);
}

oracle::Matrix to_oracle(const Eigen::MatrixXd& A) {
    oracle::Matrix out(A.rows(), std::vector<double>(A.cols()));
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < A.cols(); ++j) out[i][j] = A(i, j);
    return out;
}

}  // namespace

TEST_CASE("diagonal pencil") {
    Eigen::MatrixXd K = Eigen::Vector3d(1.0, 4.0, 9.0).asDiagonal();
    Eigen::MatrixXd M = Eigen::MatrixXd::Identity(3, 3);
    const auto pairs = solve_generalized_symmetric_eig(K, M, 3);
    REQUIRE(pairs.size() == 3);
    CHECK(pairs[0].omega2 == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(pairs[1].omega2 == doctest::Approx(4.0).epsilon(1e-13));
    CHECK(pairs[2].omega2 == doctest::Approx(9.0).epsilon(1e-13));
}

TEST_CASE("proportional pencil K = 2M") {
    std::mt19937 rng(5);
    const Eigen::MatrixXd M = random_spd(12, rng, 2.0);
    const Eigen::MatrixXd K = 2.0 * M;
    const auto pairs = solve_generalized_symmetric_eig(K, M, 12);
    for (const auto& pr : pairs)
        CHECK(pr.omega2 == doctest::Approx(2.0).epsilon(1e-11));
}

TEST_CASE("identity pencil from a synthetic state") {
    std::mt19937 rng(17);
    const Eigen::MatrixXd M = random_spd(8, rng, 1.0);
    const auto pairs = solve_generalized_symmetric_eig(M, M, 8);
    for (const auto& pr : pairs)
        CHECK(pr.omega2 == doctest::Approx(1.0).epsilon(1e-11));
}

TEST_CASE("random pencils match the jacobi full-spectrum oracle") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 8; ++trial) {
        const int n = 20;
        Eigen::MatrixXd K = random_spd(n, rng, 0.5);
        Eigen::MatrixXd M = random_spd(n, rng, 1.5);
        const auto pairs = solve_generalized_symmetric_eig(K, M, n);
        const auto reference = oracle::generalized_eigenvalues(to_oracle(K), to_oracle(M));
        REQUIRE(pairs.size() == reference.size());
        for (std::size_t k = 0; k < pairs.size(); ++k)
            CHECK(pairs[k].omega2 ==
                  doctest::Approx(reference[k]).epsilon(1e-9));
    }
}

TEST_CASE("eigenpair invariants: normalization and residual") {
    std::mt19937 rng(31);
    const int n = 15;
    const Eigen::MatrixXd K = random_spd(n, rng, 0.1);
    const Eigen::MatrixXd M = random_spd(n, rng, 1.0);
    const auto pairs = solve_generalized_symmetric_eig(K, M, 5);
    for (const auto& pr : pairs) {
        CHECK(pr.shape.dot(M * pr.shape) == doctest::Approx(1.0).epsilon(1e-9));
        const double resid = (K * pr.shape - pr.omega2 * (M * pr.shape)).norm();
        CHECK(resid <= 1e-8 * (K * pr.shape).norm());
    }
}

TEST_CASE("indefinite mass is rejected") {
    Eigen::MatrixXd K = Eigen::MatrixXd::Identity(4, 4);
    Eigen::MatrixXd M = Eigen::MatrixXd::Identity(4, 4);
    M(2, 2) = -1.0;
    CHECK_THROWS_AS(solve_generalized_symmetric_eig(K, M, 2), std::runtime_error);
    CHECK_THROWS_AS(
        solve_generalized_symmetric_eig(Eigen::MatrixXd::Identity(3, 3), M, 1),
        std::invalid_argument);
}

TEST_CASE("elastic beam modes against the closed form") {
    const Mesh mesh(30, kBeam.L);
    const AxialState axial(kN, kBeam);
    const SystemState st = newton_solve(Case2{0.0, kN}, mesh, kBeam);
    const auto pairs = modal_analysis(st, 3);
    REQUIRE(pairs.size() == 3);

    const double om1 = omega_elastic(kBeam);
    CHECK(std::sqrt(pairs[0].omega2) == doctest::Approx(om1).epsilon(1e-3));
    CHECK(std::sqrt(pairs[1].omega2) == doctest::Approx(4.0 * om1).epsilon(5e-3));
    CHECK(std::sqrt(pairs[2].omega2) == doctest::Approx(9.0 * om1).epsilon(2e-2));

    // shapes come back full-size, pinned at the supports, mass-normalized
    const auto free = st.constraints.free_dofs(mesh.n_dofs());
    for (const auto& pr : pairs) {
        CHECK(pr.shape.size() == mesh.n_dofs());
        CHECK(pr.shape[0] == 0.0);
        CHECK(pr.shape[2 * mesh.n_elems] == 0.0);
        CHECK(pr.shape.dot(st.M_glob * pr.shape) == doctest::Approx(1.0).epsilon(1e-9));
        const Eigen::MatrixXd Kr = reduce(st.K_T, free);
        const Eigen::MatrixXd Mr = reduce(st.M_glob, free);
        const Eigen::VectorXd sr = reduce(pr.shape, free);
        CHECK((Kr * sr - pr.omega2 * (Mr * sr)).norm() <= 1e-8 * (Kr * sr).norm());
    }

    // fundamental shape resembles the sine
    const auto& shape = pairs[0].shape;
    const double mid = shape[mesh.n_elems];
    for (int i = 1; i < mesh.n_nodes() - 1; ++i) {
        const double expected = mid * std::sin(M_PI * mesh.node_x[i] / kBeam.L);
        CHECK(shape[2 * i] == doctest::Approx(expected).epsilon(1e-3));
    }
}

TEST_CASE("modal analysis of a deeply cracked state stays positive") {
    const Mesh mesh(30, kBeam.L);
    const AxialState axial(kN, kBeam);
    const auto [pbar, pbarbar] = case2_limit_loads(kN, kBeam);
    const SystemState st = newton_solve(Case2{0.9 * pbarbar, kN}, mesh, kBeam);
    const auto pairs = modal_analysis(st, 2);
    CHECK(pairs[0].omega2 > 0.0);
    CHECK(pairs[0].omega2 < pairs[1].omega2);
    const auto m = fundamental_mode(st, kBeam, axial);
    CHECK(m.ratio > 0.0);
    CHECK(m.ratio < 1.0);
    CHECK(m.mode_shape.size() == static_cast<std::size_t>(mesh.n_nodes()));
}
