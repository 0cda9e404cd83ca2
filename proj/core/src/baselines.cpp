#include "nbd/baselines.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "nbd/nb_matrix.hpp"

namespace nbd {

TruncatedEmbedding nbd_embedding(const ComplexSpectrum& spectrum, int k) {
    if (k < 0) throw std::invalid_argument("nbd_embedding: k must be non-negative");
    const int size = static_cast<int>(spectrum.eigenvalues.size());
    if (k > size)
        throw std::invalid_argument("nbd_embedding: k=" + std::to_string(k) +
                                    " exceeds the spectrum size " + std::to_string(size));
    auto sorted = spectrum.eigenvalues;
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        const double ma = std::abs(a), mb = std::abs(b);
        if (ma != mb) return ma > mb;
        if (a.real() != b.real()) return a.real() > b.real();
        return a.imag() > b.imag();
    });
    TruncatedEmbedding emb;
    emb.alphas.reserve(static_cast<std::size_t>(k));
    emb.betas.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        emb.alphas.push_back(sorted[static_cast<std::size_t>(i)].real());
        emb.betas.push_back(sorted[static_cast<std::size_t>(i)].imag());
    }
    return emb;
}

double nbd_distance(const TruncatedEmbedding& a, const TruncatedEmbedding& b) {
    if (a.alphas.size() != b.alphas.size())
        throw std::invalid_argument("nbd_distance: embeddings have different k");
    double sq_sum = 0.0;
    for (std::size_t i = 0; i < a.alphas.size(); ++i) {
        const double da = a.alphas[i] - b.alphas[i];
        const double db = a.betas[i] - b.betas[i];
        sq_sum += da * da + db * db;
    }
    return std::sqrt(sq_sum);
}

double nbd_distance(const Graph& g1, const Graph& g2, int k) {
    const ComplexSpectrum s1 = eigenvalues_of(reduced_nb_matrix(g1.two_core()));
    const ComplexSpectrum s2 = eigenvalues_of(reduced_nb_matrix(g2.two_core()));
    const int limit = static_cast<int>(std::min(s1.eigenvalues.size(), s2.eigenvalues.size()));
    if (k > limit)
        throw std::invalid_argument(
            "nbd_distance: k=" + std::to_string(k) +
            " exceeds the smaller spectrum; at most min{2n1, 2n2} = " + std::to_string(limit) +
            " eigenvalues are comparable");
    return nbd_distance(nbd_embedding(s1, k), nbd_embedding(s2, k));
}

std::vector<double> laplacian_spectrum(const Graph& g) {
    const int n = g.vertex_count();
    Eigen::MatrixXd laplacian = Eigen::MatrixXd::Zero(n, n);
    for (int u = 0; u < n; ++u) {
        laplacian(u, u) = g.degree(u);
        for (int v : g.neighbors(u)) laplacian(u, v) = -1.0;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(laplacian, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw NumericalError("Laplacian eigendecomposition did not converge for dimension " +
                             std::to_string(n));
    std::vector<double> values(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
    std::sort(values.begin(), values.end(), std::greater<>());
    return values;
}

double laplacian_distance(const std::vector<double>& spectrum1,
                          const std::vector<double>& spectrum2, int k) {
    const int limit = static_cast<int>(std::min(spectrum1.size(), spectrum2.size()));
    if (k < 0 || k > limit)
        throw std::invalid_argument("laplacian_distance: k=" + std::to_string(k) +
                                    " exceeds the smaller spectrum size " + std::to_string(limit));
    double sq_sum = 0.0;
    for (int i = 0; i < k; ++i) {
        const double diff = spectrum1[static_cast<std::size_t>(i)] -
                            spectrum2[static_cast<std::size_t>(i)];
        sq_sum += diff * diff;
    }
    return std::sqrt(sq_sum);
}

double laplacian_distance(const Graph& g1, const Graph& g2, int k) {
    return laplacian_distance(laplacian_spectrum(g1), laplacian_spectrum(g2), k);
}

}  // namespace nbd
