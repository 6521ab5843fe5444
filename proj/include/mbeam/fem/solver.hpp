#pragma once

#include <stdexcept>
#include <string>

#include "mbeam/analytical.hpp"
#include "mbeam/fem/system.hpp"

namespace mbeam::fem {

class convergence_error : public std::runtime_error {
public:
    convergence_error(const std::string& what, int iterations, double residual)
        : std::runtime_error(what), iterations_(iterations), residual_(residual) {}

    int iterations() const noexcept { return iterations_; }
    double residual() const noexcept { return residual_; }

private:
    int iterations_;
    double residual_;
};

struct NewtonOptions {
    int initial_steps = 10;      // equal load increments
    int max_iterations = 50;     // Newton cap per increment
    int max_step_doublings = 3;  // restarts with doubled step count
    double rel_tol = 1e-8;       // on ||f_ext - f_int|| vs ||f_ext||
    double abs_tol = 1e-8;       // fallback when f_ext = 0 (N)
};

// Incremental Newton solve of the nonlinear equilibrium problem for an
// end-moment (Case1) or uniform-load (Case2) case, each increment starting
// from the previous converged state. The returned state carries the tangent
// stiffness at the converged equilibrium. Throws convergence_error (with the
// last residual) after exhausting the step doublings.
SystemState newton_solve(const LoadCase& load, const Mesh& mesh, const BeamSpec& spec,
                         const NewtonOptions& options = {});

// Impose the deflection A sin(pi x / L) kinematically: nodal dofs are set
// from the shape and its derivative, Gauss curvatures follow from the
// Hermite interpolation; no equilibrium solve is performed.
SystemState prescribe_deformation(double A, double N, const Mesh& mesh,
                                  const BeamSpec& spec);

// Newton for the load-driven cases, kinematic prescription for Case3.
SystemState equilibrium_state(const LoadCase& load, const Mesh& mesh,
                              const BeamSpec& spec, const NewtonOptions& options = {});

// Smallest Gauss-point abscissa whose curvature exceeds the elastic limit;
// L/2 when the whole span is elastic.
double crack_front(const SystemState& state, const AxialState& axial);

}  // namespace mbeam::fem
