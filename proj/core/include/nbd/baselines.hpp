#ifndef NBD_BASELINES_HPP
#define NBD_BASELINES_HPP

#include <vector>

#include "nbd/graph.hpp"
#include "nbd/spectrum.hpp"

namespace nbd {

/// Real and imaginary parts of the k largest eigenvalues, ordered by
/// (|lambda| desc, Re desc, Im desc).
struct TruncatedEmbedding {
    std::vector<double> alphas;
    std::vector<double> betas;
};

/// Throws std::invalid_argument when k exceeds the spectrum size; k = 0 gives
/// an empty embedding.
TruncatedEmbedding nbd_embedding(const ComplexSpectrum& spectrum, int k);

/// Euclidean distance between two truncated embeddings of equal k.
double nbd_distance(const TruncatedEmbedding& a, const TruncatedEmbedding& b);

/// Truncated non-backtracking spectral distance. Both graphs run through the
/// same two-core -> B' pipeline as the distributional distance; k must not
/// exceed the smaller spectrum (min{2n1, 2n2} on the two-cores).
double nbd_distance(const Graph& g1, const Graph& g2, int k);

/// Eigenvalues of L = D - A, sorted descending. Operates on the graph as
/// given (no two-core reduction).
std::vector<double> laplacian_spectrum(const Graph& g);

/// Euclidean distance between the k largest Laplacian eigenvalues of each
/// graph; k must not exceed min(n1, n2).
double laplacian_distance(const Graph& g1, const Graph& g2, int k);
double laplacian_distance(const std::vector<double>& spectrum1,
                          const std::vector<double>& spectrum2, int k);

}  // namespace nbd

#endif  // NBD_BASELINES_HPP
