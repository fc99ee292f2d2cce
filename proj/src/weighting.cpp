#include "cellres/weighting.hpp"

#include <algorithm>
#include <stdexcept>

namespace cellres {

EdgeWeighting::EdgeWeighting(int m_, int n_, std::vector<std::vector<std::int64_t>> omega_)
    : m(m_), n(n_), omega(std::move(omega_)) {
    if (m < 1 || n < 1) throw std::invalid_argument("EdgeWeighting: m, n must be positive");
    if (static_cast<int>(omega.size()) != m)
        throw std::invalid_argument("EdgeWeighting: row count must equal m");
    for (const auto& row : omega) {
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("EdgeWeighting: column count must equal n");
        for (std::int64_t w : row)
            if (w < 1) throw std::invalid_argument("EdgeWeighting: weights must be >= 1");
    }
}

VertexWeighting::VertexWeighting(int m_, int n_, std::vector<std::int64_t> lx,
                                 std::vector<std::int64_t> ly)
    : m(m_), n(n_), lambda_x(std::move(lx)), lambda_y(std::move(ly)) {
    if (m < 1 || n < 1) throw std::invalid_argument("VertexWeighting: m, n must be positive");
    if (static_cast<int>(lambda_x.size()) != m || static_cast<int>(lambda_y.size()) != n)
        throw std::invalid_argument("VertexWeighting: weight vector lengths must match m, n");
    for (std::int64_t w : lambda_x)
        if (w < 1) throw std::invalid_argument("VertexWeighting: weights must be >= 1");
    for (std::int64_t w : lambda_y)
        if (w < 1) throw std::invalid_argument("VertexWeighting: weights must be >= 1");
}

VertexLabeling edge_weight_labels(const EdgeWeighting& w) {
    VertexLabeling out;
    out.m = w.m;
    out.n = w.n;
    Ambient amb{w.m, w.n};
    out.labels.reserve(static_cast<std::size_t>(w.m) * w.n);
    for (int i = 1; i <= w.m; ++i)
        for (int j = 1; j <= w.n; ++j) {
            std::int64_t e = w.weight(i, j);
            out.labels.push_back(Monomial::x(amb, i, e).times(Monomial::y(amb, j, e)));
        }
    return out;
}

VertexLabeling vertex_weight_labels(const VertexWeighting& v) {
    VertexLabeling out;
    out.m = v.m;
    out.n = v.n;
    Ambient amb{v.m, v.n};
    out.labels.reserve(static_cast<std::size_t>(v.m) * v.n);
    for (int i = 1; i <= v.m; ++i)
        for (int j = 1; j <= v.n; ++j)
            out.labels.push_back(Monomial::x(amb, i, v.lambda_x[i - 1])
                                     .times(Monomial::y(amb, j, v.lambda_y[j - 1])));
    return out;
}

EdgeWeighting delete_vertex(const EdgeWeighting& w, Side side, int index) {
    if (side == Side::X) {
        if (index < 1 || index > w.m) throw std::invalid_argument("delete_vertex: X index out of range");
        if (w.m < 2) throw std::invalid_argument("delete_vertex: cannot delete the last X vertex");
        std::vector<std::vector<std::int64_t>> rows;
        rows.reserve(w.m - 1);
        for (int i = 1; i <= w.m; ++i)
            if (i != index) rows.push_back(w.omega[i - 1]);
        return EdgeWeighting(w.m - 1, w.n, std::move(rows));
    }
    if (index < 1 || index > w.n) throw std::invalid_argument("delete_vertex: Y index out of range");
    if (w.n < 2) throw std::invalid_argument("delete_vertex: cannot delete the last Y vertex");
    std::vector<std::vector<std::int64_t>> rows(w.m);
    for (int i = 0; i < w.m; ++i) {
        rows[i].reserve(w.n - 1);
        for (int j = 1; j <= w.n; ++j)
            if (j != index) rows[i].push_back(w.omega[i][j - 1]);
    }
    return EdgeWeighting(w.m, w.n - 1, std::move(rows));
}

std::int64_t min_weight(const EdgeWeighting& w) {
    std::int64_t best = w.omega[0][0];
    for (const auto& row : w.omega)
        for (std::int64_t v : row) best = std::min(best, v);
    return best;
}

}  // namespace cellres
