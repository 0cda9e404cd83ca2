#include "nbd/nb_matrix.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace nbd {

NBMatrix NBMatrix::build(const Graph& g) {
    NBMatrix nb;
    const int n = g.vertex_count();
    // Directed edges sorted by (from, to): neighbor lists are sorted, so
    // walking vertices in order emits them sorted already.
    std::vector<int> row_start(n + 1, 0);
    for (int u = 0; u < n; ++u) {
        row_start[u + 1] = row_start[u] + g.degree(u);
        for (int v : g.neighbors(u)) nb.edges_.push_back({u, v});
    }
    // Index of (u, v): row_start[u] + rank of v within neighbors(u).
    auto edge_index = [&](int u, int v) {
        const auto& nbrs = g.neighbors(u);
        auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v);
        return row_start[u] + static_cast<int>(it - nbrs.begin());
    };
    nb.successors_.resize(nb.edges_.size());
    for (std::size_t i = 0; i < nb.edges_.size(); ++i) {
        auto [u, v] = nb.edges_[i];
        for (int y : g.neighbors(v))
            if (y != u) nb.successors_[i].push_back(edge_index(v, y));
    }
    return nb;
}

Eigen::MatrixXd NBMatrix::to_dense() const {
    const auto m2 = static_cast<Eigen::Index>(dim());
    Eigen::MatrixXd dense = Eigen::MatrixXd::Zero(m2, m2);
    for (Eigen::Index i = 0; i < m2; ++i)
        for (int j : successors_[static_cast<std::size_t>(i)]) dense(i, j) = 1.0;
    return dense;
}

std::uint64_t nb_cycle_count(const Graph& g, int k, int k_cap) {
    if (k < 1) throw std::invalid_argument("nb_cycle_count: k must be >= 1");
    if (k > k_cap)
        throw std::invalid_argument("nb_cycle_count: k=" + std::to_string(k) +
                                    " exceeds the cap " + std::to_string(k_cap));
    const NBMatrix nb = NBMatrix::build(g);
    const std::size_t dim = nb.dim();
    unsigned __int128 trace = 0;
    std::vector<std::uint64_t> walk(dim), next(dim);
    for (std::size_t start = 0; start < dim; ++start) {
        std::fill(walk.begin(), walk.end(), 0);
        walk[start] = 1;
        for (int step = 0; step < k; ++step) {
            std::fill(next.begin(), next.end(), 0);
            for (std::size_t e = 0; e < dim; ++e) {
                if (walk[e] == 0) continue;
                for (int s : nb.successors(static_cast<int>(e)))
                    if (__builtin_add_overflow(next[s], walk[e], &next[s]))
                        throw std::overflow_error("nb_cycle_count: walk count overflow");
            }
            walk.swap(next);
        }
        trace += walk[start];
    }
    if (trace > std::numeric_limits<std::uint64_t>::max())
        throw std::overflow_error("nb_cycle_count: trace exceeds 64-bit range");
    return static_cast<std::uint64_t>(trace);
}

Eigen::MatrixXd reduced_nb_matrix(const Graph& g) {
    const int n = g.vertex_count();
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    for (int u = 0; u < n; ++u) {
        for (int v : g.neighbors(u)) m(u, v) = 1.0;  // A
        m(u, n + u) = 1.0 - g.degree(u);             // I - D
        m(n + u, u) = 1.0;                           // I
    }
    return m;
}

}  // namespace nbd
