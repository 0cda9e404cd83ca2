#ifndef NBD_NB_MATRIX_HPP
#define NBD_NB_MATRIX_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "nbd/graph.hpp"

namespace nbd {

struct DirectedEdge {
    int from = 0;
    int to = 0;
    bool operator==(const DirectedEdge&) const = default;
};

/// The non-backtracking (Hashimoto) operator on directed edges: the 2m x 2m
/// 0/1 matrix with entry ((u->v), (x->y)) = 1 iff x = v and y != u. Stored
/// sparsely as a successor list per directed edge; edges are ordered
/// lexicographically by (from, to) so the layout is deterministic.
class NBMatrix {
public:
    static NBMatrix build(const Graph& g);

    std::size_t dim() const { return edges_.size(); }
    const std::vector<DirectedEdge>& directed_edges() const { return edges_; }
    const std::vector<int>& successors(int row) const { return successors_.at(row); }

    Eigen::MatrixXd to_dense() const;

private:
    std::vector<DirectedEdge> edges_;
    std::vector<std::vector<int>> successors_;
};

/// tr(B^k): the number of closed non-backtracking walks of length k rooted at
/// a directed edge, computed exactly with integer arithmetic. Throws
/// std::invalid_argument when k < 1 or k > k_cap and std::overflow_error when
/// a count exceeds the 64-bit range.
std::uint64_t nb_cycle_count(const Graph& g, int k, int k_cap = 12);

/// The 2n x 2n linearization [A, I-D; I, 0] sharing all B eigenvalues except
/// |E|-|V| copies each of +1 and -1. The caller is expected to pass a
/// two-core; the blocks are assembled from the graph as given.
Eigen::MatrixXd reduced_nb_matrix(const Graph& g);

}  // namespace nbd

#endif  // NBD_NB_MATRIX_HPP
