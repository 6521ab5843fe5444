#pragma once

#include <vector>

namespace mbeam::fem {

// Uniform 1-D mesh with two degrees of freedom per node: transverse
// displacement phi and its derivative phi_x.
struct Mesh {
    int n_elems;
    double length;
    std::vector<double> node_x;

    Mesh(int n_elems, double length);

    double elem_length() const { return length / n_elems; }
    int n_nodes() const { return n_elems + 1; }
    int n_dofs() const { return 2 * (n_elems + 1); }
};

// Homogeneous single-point constraints, applied by row/column elimination.
struct Constraints {
    std::vector<int> fixed;  // sorted dof indices prescribed to zero

    // phi = 0 at both end nodes.
    static Constraints simply_supported(const Mesh& mesh);

    std::vector<int> free_dofs(int n_dofs) const;
};

}  // namespace mbeam::fem
