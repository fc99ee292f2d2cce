#pragma once

#include <cstdint>
#include <vector>

#include "cellres/monomial.hpp"

namespace cellres {

enum class Side { X, Y };

/// An edge-weighting of the complete bipartite graph K_{m,n}:
/// omega[i-1][j-1] is the positive weight of the edge X_i Y_j.
struct EdgeWeighting {
    int m = 0;
    int n = 0;
    std::vector<std::vector<std::int64_t>> omega;

    EdgeWeighting() = default;
    EdgeWeighting(int m, int n, std::vector<std::vector<std::int64_t>> omega);

    std::int64_t weight(int i, int j) const { return omega[i - 1][j - 1]; }
};

/// A vertex-weighting of K_{m,n}: one positive weight per vertex.
struct VertexWeighting {
    int m = 0;
    int n = 0;
    std::vector<std::int64_t> lambda_x;
    std::vector<std::int64_t> lambda_y;

    VertexWeighting() = default;
    VertexWeighting(int m, int n, std::vector<std::int64_t> lambda_x,
                    std::vector<std::int64_t> lambda_y);
};

/// The monomial generator attached to each vertex (i,j) of the cell complex,
/// i.e. the generator list of the edge ideal.  Both weighting kinds normalize
/// to this, so everything downstream is agnostic of where labels came from.
struct VertexLabeling {
    int m = 0;
    int n = 0;
    std::vector<Monomial> labels;  // row-major: (i-1)*n + (j-1)

    Ambient ambient() const { return Ambient{m, n}; }
    const Monomial& label(int i, int j) const { return labels[(i - 1) * n + (j - 1)]; }
};

/// label(i,j) = (X_i Y_j)^{omega(i,j)}.
VertexLabeling edge_weight_labels(const EdgeWeighting& w);

/// label(i,j) = X_i^{lambda_x(i)} Y_j^{lambda_y(j)}.
VertexLabeling vertex_weight_labels(const VertexWeighting& v);

/// Removes one X row (or Y column); remaining indices are renumbered
/// order-preservingly.  Throws when the side would be emptied.
EdgeWeighting delete_vertex(const EdgeWeighting& w, Side side, int index);

std::int64_t min_weight(const EdgeWeighting& w);

}  // namespace cellres
