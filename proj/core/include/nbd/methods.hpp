#ifndef NBD_METHODS_HPP
#define NBD_METHODS_HPP

#include <string>
#include <vector>

#include "nbd/graph.hpp"
#include "nbd/spectral_distance.hpp"

namespace nbd {

enum class DistanceMethod { dnbd, nbd, laplacian };

std::string to_string(DistanceMethod method);
DistanceMethod distance_method_from_string(const std::string& name);

/// Batch parameters shared by the three distance methods. trunc_k = 0 means
/// "largest legal k": the smallest spectrum size across the batch.
struct MethodConfig {
    DistanceMethod method = DistanceMethod::dnbd;
    int resolution = 100;  // d-NBD quadrature grid
    int trunc_k = 0;       // NBD / Laplacian truncation
};

/// Pairwise matrix under any method, computing each per-graph spectrum once.
DistanceMatrix pairwise_matrix(const std::vector<Graph>& graphs,
                               const std::vector<std::string>& labels, const MethodConfig& config,
                               int threads = 1);

}  // namespace nbd

#endif  // NBD_METHODS_HPP
