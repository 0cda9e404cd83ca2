#include "nbd/methods.hpp"

#include <algorithm>
#include <stdexcept>

#include "nbd/baselines.hpp"
#include "nbd/nb_matrix.hpp"
#include "nbd/parallel.hpp"

namespace nbd {

std::string to_string(DistanceMethod method) {
    switch (method) {
        case DistanceMethod::dnbd: return "dnbd";
        case DistanceMethod::nbd: return "nbd";
        case DistanceMethod::laplacian: return "laplacian";
    }
    return "?";
}

DistanceMethod distance_method_from_string(const std::string& name) {
    if (name == "dnbd") return DistanceMethod::dnbd;
    if (name == "nbd") return DistanceMethod::nbd;
    if (name == "laplacian") return DistanceMethod::laplacian;
    throw std::invalid_argument("unknown distance method '" + name + "'");
}

namespace {

std::vector<std::string> default_labels(std::size_t count, const std::vector<std::string>& given) {
    if (given.size() == count) return given;
    if (!given.empty()) throw std::invalid_argument("pairwise_matrix: label count mismatch");
    std::vector<std::string> labels;
    labels.reserve(count);
    for (std::size_t i = 0; i < count; ++i) labels.push_back("g" + std::to_string(i));
    return labels;
}

DistanceMatrix from_embeddings(const std::vector<TruncatedEmbedding>& embeddings,
                               std::vector<std::string> labels, int threads) {
    const int count = static_cast<int>(embeddings.size());
    DistanceMatrix dm;
    dm.labels = std::move(labels);
    dm.values = Eigen::MatrixXd::Zero(count, count);
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < count; ++i)
        for (int j = i + 1; j < count; ++j) pairs.emplace_back(i, j);
    parallel_for(static_cast<int>(pairs.size()), threads, [&](int p) {
        auto [i, j] = pairs[p];
        const double d = nbd_distance(embeddings[i], embeddings[j]);
        dm.values(i, j) = d;
        dm.values(j, i) = d;
    });
    return dm;
}

DistanceMatrix from_real_spectra(const std::vector<std::vector<double>>& spectra,
                                 std::vector<std::string> labels, int k, int threads) {
    const int count = static_cast<int>(spectra.size());
    DistanceMatrix dm;
    dm.labels = std::move(labels);
    dm.values = Eigen::MatrixXd::Zero(count, count);
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < count; ++i)
        for (int j = i + 1; j < count; ++j) pairs.emplace_back(i, j);
    parallel_for(static_cast<int>(pairs.size()), threads, [&](int p) {
        auto [i, j] = pairs[p];
        const double d = laplacian_distance(spectra[i], spectra[j], k);
        dm.values(i, j) = d;
        dm.values(j, i) = d;
    });
    return dm;
}

}  // namespace

DistanceMatrix pairwise_matrix(const std::vector<Graph>& graphs,
                               const std::vector<std::string>& labels, const MethodConfig& config,
                               int threads) {
    if (graphs.empty()) throw std::invalid_argument("pairwise_matrix: no graphs");
    auto names = default_labels(graphs.size(), labels);
    const int count = static_cast<int>(graphs.size());

    if (config.method == DistanceMethod::dnbd)
        return pairwise_distances(graphs, names, config.resolution, threads);

    if (config.method == DistanceMethod::laplacian) {
        std::vector<std::vector<double>> spectra(graphs.size());
        parallel_for(count, threads, [&](int i) {
            try {
                spectra[i] = laplacian_spectrum(graphs[i]);
            } catch (const std::exception& e) {
                throw std::runtime_error(names[i] + ": " + e.what());
            }
        });
        int k = config.trunc_k;
        std::size_t smallest = spectra[0].size();
        for (const auto& s : spectra) smallest = std::min(smallest, s.size());
        if (k == 0) k = static_cast<int>(smallest);
        if (k > static_cast<int>(smallest))
            throw std::invalid_argument("laplacian: k=" + std::to_string(k) +
                                        " exceeds the smallest spectrum size " +
                                        std::to_string(smallest));
        return from_real_spectra(spectra, std::move(names), k, threads);
    }

    // Truncated NBD: two-core B' spectra, largest-k embeddings.
    std::vector<ComplexSpectrum> spectra(graphs.size());
    parallel_for(count, threads, [&](int i) {
        try {
            spectra[i] = eigenvalues_of(reduced_nb_matrix(graphs[i].two_core()));
        } catch (const std::exception& e) {
            throw std::runtime_error(names[i] + ": " + e.what());
        }
    });
    std::size_t smallest = spectra[0].eigenvalues.size();
    for (const auto& s : spectra) smallest = std::min(smallest, s.eigenvalues.size());
    int k = config.trunc_k;
    if (k == 0) k = static_cast<int>(smallest);
    if (k > static_cast<int>(smallest))
        throw std::invalid_argument(
            "nbd: k=" + std::to_string(k) +
            " exceeds the smallest spectrum; at most min{2n1, 2n2} = " +
            std::to_string(smallest) + " eigenvalues are comparable across this batch");
    std::vector<TruncatedEmbedding> embeddings(graphs.size());
    for (int i = 0; i < count; ++i) embeddings[i] = nbd_embedding(spectra[i], k);
    return from_embeddings(embeddings, std::move(names), threads);
}

}  // namespace nbd
