#include "mbeam/fem/mesh.hpp"

#include <algorithm>
#include <stdexcept>

namespace mbeam::fem {

Mesh::Mesh(int n_elems, double length) : n_elems(n_elems), length(length) {
    if (n_elems < 1) throw std::invalid_argument("mesh needs at least one element");
    if (length <= 0.0) throw std::invalid_argument("mesh length must be positive");
    node_x.resize(n_elems + 1);
    for (int i = 0; i <= n_elems; ++i)
        node_x[i] = (i == n_elems) ? length : length * i / n_elems;
}

Constraints Constraints::simply_supported(const Mesh& mesh) {
    return Constraints{{0, 2 * mesh.n_elems}};
}

std::vector<int> Constraints::free_dofs(int n_dofs) const {
    std::vector<int> free;
    free.reserve(n_dofs - static_cast<int>(fixed.size()));
    for (int d = 0; d < n_dofs; ++d)
        if (std::find(fixed.begin(), fixed.end(), d) == fixed.end())
            free.push_back(d);
    return free;
}

}  // namespace mbeam::fem
