#include "mbeam/fem/solver.hpp"

#include <cmath>
#include <numbers>
#include <variant>

#include <Eigen/Dense>

namespace mbeam::fem {
namespace {

struct LoadSetup {
    Eigen::VectorXd f_ext;
    double N;
};

// Case1 is realized as equal and opposite end couples N*e on the rotation
// dofs, which carry a constant bending moment N*e along the span. Case2 is
// the consistent uniform load. The axial force enters only through the
// elastic limit; there is no geometric stiffness and no axial dof.
LoadSetup build_load(const LoadCase& load, const Mesh& mesh) {
    LoadSetup setup;
    setup.f_ext = Eigen::VectorXd::Zero(mesh.n_dofs());
    if (const auto* c1 = std::get_if<Case1>(&load)) {
        const double m0 = c1->N * c1->e;
        setup.f_ext[1] = m0;
        setup.f_ext[2 * mesh.n_elems + 1] = -m0;
        setup.N = c1->N;
    } else if (const auto* c2 = std::get_if<Case2>(&load)) {
        setup.f_ext = assemble_uniform_load(mesh, c2->p);
        setup.N = c2->N;
    } else {
        throw std::invalid_argument(
            "imposed-deformation case has no load-driven solve; use prescribe_deformation");
    }
    return setup;
}

}  // namespace

SystemState newton_solve(const LoadCase& load, const Mesh& mesh, const BeamSpec& spec,
                         const NewtonOptions& options) {
    if (const auto* c2 = std::get_if<Case2>(&load)) {
        const double pbarbar =
            4.0 * std::fabs(c2->N) * spec.h / (spec.L * spec.L);
        if (c2->p >= pbarbar)
            throw limit_moment_error(
                "transverse load at or beyond the limit load: the midspan section "
                "capacity is reached and no equilibrium exists",
                spec.L / 2.0);
    }
    if (const auto* c1 = std::get_if<Case1>(&load)) {
        if (std::fabs(c1->e) >= spec.h / 2.0)
            throw limit_moment_error(
                "eccentricity at or beyond h/2: the section capacity is reached "
                "and no equilibrium exists");
    }
    const LoadSetup setup = build_load(load, mesh);
    const AxialState axial(setup.N, spec);
    const Constraints constraints = Constraints::simply_supported(mesh);
    const auto free = constraints.free_dofs(mesh.n_dofs());
    verify_constraints(mesh, constraints, axial, spec);

    const Eigen::VectorXd f_reduced = reduce(setup.f_ext, free);
    const double f_norm = f_reduced.norm();
    int total_iters = 0;
    double last_residual = f_norm;

    int n_steps = options.initial_steps;
    for (int attempt = 0; attempt <= options.max_step_doublings;
         ++attempt, n_steps *= 2) {
        Eigen::VectorXd u = Eigen::VectorXd::Zero(mesh.n_dofs());
        bool failed = false;
        for (int step = 1; step <= n_steps && !failed; ++step) {
            const double lambda = static_cast<double>(step) / n_steps;
            const Eigen::VectorXd target = lambda * f_reduced;
            // Tolerance against the full load: intermediate increments are
            // predictors, the contract binds the final state.
            const double tol = f_norm > 0.0 ? options.rel_tol * f_norm : options.abs_tol;
            bool converged = false;
            for (int it = 0; it < options.max_iterations; ++it) {
                const Eigen::VectorXd r =
                    target - reduce(assemble_internal(mesh, u, axial, spec), free);
                last_residual = r.norm();
                if (!std::isfinite(last_residual) ||
                    last_residual > 1e10 * (f_norm + 1.0))
                    break;
                if (last_residual <= tol) {
                    converged = true;
                    break;
                }
                const Eigen::MatrixXd Kr =
                    reduce(assemble_tangent(mesh, u, axial, spec), free);
                // Symmetric diagonal scaling: the mixed displacement/rotation
                // dofs make cond(K) grow like (L/le)^4, which otherwise puts
                // the solve noise floor above the Newton tolerance.
                const Eigen::VectorXd scale_d =
                    Kr.diagonal().cwiseMax(1e-300).cwiseSqrt().cwiseInverse();
                const Eigen::MatrixXd Ks =
                    scale_d.asDiagonal() * Kr * scale_d.asDiagonal();
                const Eigen::VectorXd du =
                    scale_d.asDiagonal() *
                    Ks.ldlt().solve((scale_d.asDiagonal() * r).eval());
                ++total_iters;
                if (!du.allFinite()) break;
                for (std::size_t k = 0; k < free.size(); ++k) u[free[k]] += du[k];
            }
            if (!converged) failed = true;
        }
        if (!failed) {
            SystemState state =
                make_state(mesh, constraints, u, setup.f_ext, axial, spec);
            state.newton_iterations = total_iters;
            state.residual = last_residual;
            return state;
        }
    }
    throw convergence_error("equilibrium iteration failed to converge", total_iters,
                            last_residual);
}

SystemState prescribe_deformation(double A, double N, const Mesh& mesh,
                                  const BeamSpec& spec) {
    if (A < 0.0) throw std::domain_error("imposed amplitude must be non-negative");
    const AxialState axial(N, spec);
    const Constraints constraints = Constraints::simply_supported(mesh);
    Eigen::VectorXd u(mesh.n_dofs());
    const double k = std::numbers::pi / spec.L;
    for (int i = 0; i < mesh.n_nodes(); ++i) {
        u[2 * i] = A * std::sin(k * mesh.node_x[i]);
        u[2 * i + 1] = A * k * std::cos(k * mesh.node_x[i]);
    }
    u[0] = 0.0;
    u[2 * mesh.n_elems] = 0.0;  // sin(pi) rounding; the supports are pinned
    return make_state(mesh, constraints, u, Eigen::VectorXd::Zero(mesh.n_dofs()),
                      axial, spec);
}

SystemState equilibrium_state(const LoadCase& load, const Mesh& mesh,
                              const BeamSpec& spec, const NewtonOptions& options) {
    if (const auto* c3 = std::get_if<Case3>(&load))
        return prescribe_deformation(c3->A, c3->N, mesh, spec);
    return newton_solve(load, mesh, spec, options);
}

double crack_front(const SystemState& state, const AxialState& axial) {
    const double le = state.mesh.elem_length();
    const auto xi = gauss_abscissae(le);
    for (int e = 0; e < state.mesh.n_elems; ++e)
        for (int g = 0; g < kGauss; ++g)
            if (std::fabs(state.gp_curvature[e][g]) > axial.alpha)
                return state.mesh.node_x[e] + xi[g];
    return state.mesh.length / 2.0;
}

}  // namespace mbeam::fem
