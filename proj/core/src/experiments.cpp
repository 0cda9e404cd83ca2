#include "nbd/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "nbd/baselines.hpp"
#include "nbd/nb_matrix.hpp"
#include "nbd/parallel.hpp"
#include "nbd/rng.hpp"

namespace nbd {

// ---------------------------------------------------------------------------
// Datasets

LabeledDataset make_synthetic_dataset(const DatasetConfig& config) {
    if (config.classes.empty()) throw std::invalid_argument("dataset: no classes");
    if (config.size_sigma < 0.0) throw std::invalid_argument("dataset: negative size sigma");
    LabeledDataset dataset;
    std::uint64_t item = 0;
    for (std::size_t c = 0; c < config.classes.size(); ++c) {
        const ClassSpec& cls = config.classes[c];
        if (cls.count < 1) throw std::invalid_argument("dataset: class count must be >= 1");
        dataset.class_names.push_back(cls.name);
        for (int i = 0; i < cls.count; ++i, ++item) {
            Rng rng(derive_seed(config.seed, item));
            const int n = std::max(
                config.min_size,
                static_cast<int>(std::llround(rng.next_normal(config.size_mean, config.size_sigma))));
            ModelSpec spec = cls.model.with_n(n).with_seed(rng.next_u64());
            dataset.graphs.push_back(generate(spec));
            dataset.labels.push_back(static_cast<int>(c));
            dataset.names.push_back(cls.name + "_" + std::to_string(i));
        }
    }
    return dataset;
}

// ---------------------------------------------------------------------------
// Size sensitivity

namespace {

struct SweepArtifacts {
    SpectralCdf cdf;               // d-NBD
    ComplexSpectrum core_spectrum; // truncated NBD
    std::vector<double> laplacian; // Laplacian baseline
};

struct MethodNeeds {
    bool core = false;
    bool laplacian = false;
};

MethodNeeds needs_of(const std::vector<MethodConfig>& methods) {
    MethodNeeds needs;
    for (const auto& m : methods) {
        if (m.method == DistanceMethod::laplacian)
            needs.laplacian = true;
        else
            needs.core = true;
    }
    return needs;
}

SweepArtifacts compute_artifacts(const Graph& g, const MethodNeeds& needs) {
    SweepArtifacts art;
    if (needs.core) {
        art.core_spectrum = eigenvalues_of(reduced_nb_matrix(g.two_core()));
        art.cdf = SpectralCdf::from_rescaled(rescale_spectrum(art.core_spectrum));
    }
    if (needs.laplacian) art.laplacian = laplacian_spectrum(g);
    return art;
}

double population_std(const std::vector<double>& values, double mean) {
    double sq = 0.0;
    for (double v : values) sq += (v - mean) * (v - mean);
    return values.empty() ? 0.0 : std::sqrt(sq / static_cast<double>(values.size()));
}

}  // namespace

std::vector<SizeSensitivityReport> size_sensitivity_multi(
    const SizeSweepConfig& config, const std::vector<MethodConfig>& methods) {
    if (config.n_values.empty()) throw std::invalid_argument("size sweep: no n values");
    if (config.samples < 1) throw std::invalid_argument("size sweep: samples must be >= 1");
    if (methods.empty()) throw std::invalid_argument("size sweep: no methods");
    const MethodNeeds needs = needs_of(methods);
    const int n_count = static_cast<int>(config.n_values.size());
    const int total = n_count * config.samples;

    // Reference graph plus samples[ni][s]; each graph's seed depends only on
    // (seed, position), never on the method list.
    const Graph reference =
        generate(config.model.with_n(config.reference_n).with_seed(derive_seed(config.seed, 0)));
    const SweepArtifacts ref_art = compute_artifacts(reference, needs);

    std::vector<SweepArtifacts> sample_art(static_cast<std::size_t>(total));
    parallel_for(total, config.threads, [&](int item) {
        const int ni = item / config.samples;
        const int n = config.n_values[static_cast<std::size_t>(ni)];
        const Graph g = generate(
            config.model.with_n(n).with_seed(derive_seed(config.seed, 1 + static_cast<std::uint64_t>(item))));
        sample_art[static_cast<std::size_t>(item)] = compute_artifacts(g, needs);
    });

    // Auto truncation: the largest k legal across the whole sweep.
    std::size_t smallest_core = ref_art.core_spectrum.eigenvalues.size();
    std::size_t smallest_lap = ref_art.laplacian.size();
    for (const auto& art : sample_art) {
        if (needs.core) smallest_core = std::min(smallest_core, art.core_spectrum.eigenvalues.size());
        if (needs.laplacian) smallest_lap = std::min(smallest_lap, art.laplacian.size());
    }

    const auto max_it = std::max_element(config.n_values.begin(), config.n_values.end());
    const int max_index = static_cast<int>(max_it - config.n_values.begin());

    std::vector<SizeSensitivityReport> reports;
    for (const auto& method : methods) {
        int trunc_k = method.trunc_k;
        if (method.method == DistanceMethod::nbd && trunc_k == 0)
            trunc_k = static_cast<int>(smallest_core);
        if (method.method == DistanceMethod::laplacian && trunc_k == 0)
            trunc_k = static_cast<int>(smallest_lap);

        TruncatedEmbedding ref_embedding;
        if (method.method == DistanceMethod::nbd)
            ref_embedding = nbd_embedding(ref_art.core_spectrum, trunc_k);

        SizeSensitivityReport report;
        report.n_values = config.n_values;
        for (int ni = 0; ni < n_count; ++ni) {
            std::vector<double> distances(static_cast<std::size_t>(config.samples));
            for (int s = 0; s < config.samples; ++s) {
                const auto& art = sample_art[static_cast<std::size_t>(ni * config.samples + s)];
                double d = 0.0;
                switch (method.method) {
                    case DistanceMethod::dnbd:
                        d = dnbd(ref_art.cdf, art.cdf, method.resolution);
                        break;
                    case DistanceMethod::nbd:
                        d = nbd_distance(ref_embedding, nbd_embedding(art.core_spectrum, trunc_k));
                        break;
                    case DistanceMethod::laplacian:
                        d = laplacian_distance(ref_art.laplacian, art.laplacian, trunc_k);
                        break;
                }
                distances[static_cast<std::size_t>(s)] = d;
            }
            const double mean = std::accumulate(distances.begin(), distances.end(), 0.0) /
                                static_cast<double>(distances.size());
            report.mean_distance.push_back(mean);
            report.std_distance.push_back(population_std(distances, mean));
        }
        report.rescale_constant = report.mean_distance[static_cast<std::size_t>(max_index)];
        for (int ni = 0; ni < n_count; ++ni) {
            const double c = report.rescale_constant;
            report.mean_rescaled.push_back(c > 0.0 ? report.mean_distance[ni] / c : 0.0);
            report.std_rescaled.push_back(c > 0.0 ? report.std_distance[ni] / c : 0.0);
        }
        reports.push_back(std::move(report));
    }
    return reports;
}

SizeSensitivityReport size_sensitivity(const SizeSweepConfig& config) {
    return size_sensitivity_multi(config, {config.method}).front();
}

// ---------------------------------------------------------------------------
// PCA

PcaResult pca_project(const std::vector<std::vector<double>>& vectors, int dims) {
    if (vectors.empty()) throw std::invalid_argument("pca: no vectors");
    const int count = static_cast<int>(vectors.size());
    const int dim = static_cast<int>(vectors.front().size());
    for (const auto& v : vectors)
        if (static_cast<int>(v.size()) != dim)
            throw std::invalid_argument("pca: vectors have unequal lengths");
    if (dims < 1 || dims > dim)
        throw std::invalid_argument("pca: dims must lie in [1, vector length]");

    Eigen::MatrixXd data(count, dim);
    for (int i = 0; i < count; ++i)
        for (int j = 0; j < dim; ++j) data(i, j) = vectors[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    const Eigen::RowVectorXd mean = data.colwise().mean();
    data.rowwise() -= mean;

    PcaResult result;
    result.components = Eigen::MatrixXd::Zero(dims, dim);
    result.variances = Eigen::VectorXd::Zero(dims);

    const double denom = count > 1 ? static_cast<double>(count - 1) : 1.0;
    if (dim <= count) {
        const Eigen::MatrixXd covariance = data.transpose() * data / denom;
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(covariance);
        if (solver.info() != Eigen::Success)
            throw NumericalError("PCA eigendecomposition did not converge for dimension " +
                                 std::to_string(dim));
        const double scale = std::max(solver.eigenvalues().cwiseAbs().maxCoeff(), 1.0);
        for (int a = 0; a < dims; ++a) {
            const int src = dim - 1 - a;  // eigenvalues come back ascending
            const double variance = solver.eigenvalues()(src);
            if (variance <= 1e-12 * scale) break;  // remaining axes stay zero
            result.components.row(a) = solver.eigenvectors().col(src).transpose();
            result.variances(a) = variance;
        }
    } else {
        // Gram-matrix route for dimension > sample count: the covariance
        // eigenvectors with nonzero eigenvalue are X^T u / sqrt((N-1) lambda).
        const Eigen::MatrixXd gram = data * data.transpose() / denom;
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(gram);
        if (solver.info() != Eigen::Success)
            throw NumericalError("PCA eigendecomposition did not converge for dimension " +
                                 std::to_string(count));
        const double scale = std::max(solver.eigenvalues().cwiseAbs().maxCoeff(), 1.0);
        for (int a = 0; a < dims; ++a) {
            const int src = count - 1 - a;
            if (src < 0) break;
            const double variance = solver.eigenvalues()(src);
            if (variance <= 1e-12 * scale) break;
            result.components.row(a) = (data.transpose() * solver.eigenvectors().col(src) /
                                        std::sqrt(denom * variance))
                                           .transpose();
            result.variances(a) = variance;
        }
    }

    // Deterministic sign: first non-negligible component of each axis positive.
    for (int a = 0; a < dims; ++a) {
        for (int j = 0; j < dim; ++j) {
            const double x = result.components(a, j);
            if (std::abs(x) > 1e-12) {
                if (x < 0.0) result.components.row(a) = -result.components.row(a);
                break;
            }
        }
    }
    result.projected = data * result.components.transpose();
    return result;
}

// ---------------------------------------------------------------------------
// Watts-Strogatz manifold

WsManifoldResult ws_manifold(const WsManifoldConfig& config) {
    if (config.p_values.empty() || config.k_values.empty())
        throw std::invalid_argument("ws_manifold: empty parameter grid");
    if (config.samples < 1) throw std::invalid_argument("ws_manifold: samples must be >= 1");
    if (config.embed_k < 2) throw std::invalid_argument("ws_manifold: embed_k must be >= 2");

    WsManifoldResult result;
    for (double p : config.p_values)
        for (int k : config.k_values) result.cells.push_back({p, k, {}});

    const int cell_count = static_cast<int>(result.cells.size());
    const std::size_t embed_dim =
        static_cast<std::size_t>(config.embed_k) * static_cast<std::size_t>(config.embed_k);
    result.mean_embeddings.assign(static_cast<std::size_t>(cell_count),
                                  std::vector<double>(embed_dim, 0.0));

    parallel_for(cell_count, config.threads, [&](int cell) {
        ModelSpec spec;
        spec.family = ModelFamily::ws;
        spec.n = config.n;
        spec.p = result.cells[static_cast<std::size_t>(cell)].p;
        spec.k = result.cells[static_cast<std::size_t>(cell)].k;
        auto& mean = result.mean_embeddings[static_cast<std::size_t>(cell)];
        for (int s = 0; s < config.samples; ++s) {
            const std::uint64_t item =
                static_cast<std::uint64_t>(cell) * static_cast<std::uint64_t>(config.samples) + s;
            const Graph g = generate(spec.with_seed(derive_seed(config.seed, item)));
            const auto v = embed(SpectralCdf::from_graph(g), config.embed_k);
            for (std::size_t i = 0; i < embed_dim; ++i) mean[i] += v[i];
        }
        for (double& x : mean) x /= static_cast<double>(config.samples);
    });

    const PcaResult pca = pca_project(result.mean_embeddings, 3);
    for (int cell = 0; cell < cell_count; ++cell)
        for (int axis = 0; axis < 3; ++axis)
            result.cells[static_cast<std::size_t>(cell)].projection[static_cast<std::size_t>(axis)] =
                pca.projected(cell, axis);
    return result;
}

// ---------------------------------------------------------------------------
// kNN classification

namespace {

// Canonical point order that only depends on each point's distance profile,
// not on its position in the input: sorting the row makes the key invariant
// under a joint permutation of matrix and labels, and summing the sorted row
// keeps even the floating-point addition order fixed.
std::vector<int> canonical_ranks(const Eigen::MatrixXd& values) {
    const int count = static_cast<int>(values.rows());
    std::vector<std::vector<double>> sorted_rows(static_cast<std::size_t>(count));
    std::vector<double> sums(static_cast<std::size_t>(count), 0.0);
    for (int i = 0; i < count; ++i) {
        auto& row = sorted_rows[static_cast<std::size_t>(i)];
        row.resize(static_cast<std::size_t>(count));
        for (int j = 0; j < count; ++j) row[static_cast<std::size_t>(j)] = values(i, j);
        std::sort(row.begin(), row.end());
        for (double v : row) sums[static_cast<std::size_t>(i)] += v;
    }
    std::vector<int> order(static_cast<std::size_t>(count));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const auto sa = sums[static_cast<std::size_t>(a)], sb = sums[static_cast<std::size_t>(b)];
        if (sa != sb) return sa < sb;
        const auto& ra = sorted_rows[static_cast<std::size_t>(a)];
        const auto& rb = sorted_rows[static_cast<std::size_t>(b)];
        if (ra != rb) return ra < rb;
        return a < b;  // indistinguishable profiles: fall back to input order
    });
    std::vector<int> rank(static_cast<std::size_t>(count));
    for (int r = 0; r < count; ++r) rank[static_cast<std::size_t>(order[static_cast<std::size_t>(r)])] = r;
    return rank;
}

int classify_point(const Eigen::MatrixXd& dm, const std::vector<int>& rank,
                   const std::vector<int>& labels, int point, const std::vector<int>& candidates,
                   int k_neighbors, int class_count) {
    // k nearest by (distance, canonical rank)
    std::vector<std::pair<double, int>> order;
    order.reserve(candidates.size());
    for (int c : candidates)
        if (c != point) order.emplace_back(dm(point, c), c);
    const int k = std::min<int>(k_neighbors, static_cast<int>(order.size()));
    std::partial_sort(order.begin(), order.begin() + k, order.end(),
                      [&](const auto& a, const auto& b) {
                          if (a.first != b.first) return a.first < b.first;
                          return rank[static_cast<std::size_t>(a.second)] <
                                 rank[static_cast<std::size_t>(b.second)];
                      });
    std::vector<int> votes(static_cast<std::size_t>(class_count), 0);
    std::vector<double> summed(static_cast<std::size_t>(class_count), 0.0);
    for (int i = 0; i < k; ++i) {
        const int cls = labels[static_cast<std::size_t>(order[static_cast<std::size_t>(i)].second)];
        ++votes[static_cast<std::size_t>(cls)];
        summed[static_cast<std::size_t>(cls)] += order[static_cast<std::size_t>(i)].first;
    }
    int best = -1;
    for (int cls = 0; cls < class_count; ++cls) {
        if (votes[static_cast<std::size_t>(cls)] == 0) continue;
        if (best < 0) {
            best = cls;
            continue;
        }
        const int vb = votes[static_cast<std::size_t>(best)], vc = votes[static_cast<std::size_t>(cls)];
        if (vc > vb ||
            (vc == vb && summed[static_cast<std::size_t>(cls)] < summed[static_cast<std::size_t>(best)]))
            best = cls;
        // equal votes and equal summed distance: keep the smaller class id
    }
    return best;
}

FoldMetrics metrics_from_confusion(const Eigen::MatrixXi& confusion) {
    const int classes = static_cast<int>(confusion.rows());
    double recall = 0.0, precision = 0.0;
    int correct = 0, total = 0;
    for (int c = 0; c < classes; ++c) {
        const int true_count = confusion.row(c).sum();
        const int pred_count = confusion.col(c).sum();
        const int tp = confusion(c, c);
        recall += true_count > 0 ? static_cast<double>(tp) / true_count : 0.0;
        precision += pred_count > 0 ? static_cast<double>(tp) / pred_count : 0.0;
        correct += tp;
        total += true_count;
    }
    FoldMetrics m;
    m.recall = recall / classes;
    m.precision = precision / classes;
    m.accuracy = total > 0 ? static_cast<double>(correct) / total : 0.0;
    return m;
}

}  // namespace

ClassificationReport knn_classify(const DistanceMatrix& dm, const std::vector<int>& labels,
                                  const KnnConfig& config) {
    const int count = static_cast<int>(labels.size());
    if (dm.values.rows() != count || dm.values.cols() != count)
        throw std::invalid_argument("knn: distance matrix does not match label count");
    if (config.folds < 2) throw std::invalid_argument("knn: folds must be >= 2");
    if (config.k_neighbors < 1) throw std::invalid_argument("knn: k_neighbors must be >= 1");

    // Compact class ids in sorted order of their original values.
    std::vector<int> unique_labels(labels);
    std::sort(unique_labels.begin(), unique_labels.end());
    unique_labels.erase(std::unique(unique_labels.begin(), unique_labels.end()),
                        unique_labels.end());
    const int class_count = static_cast<int>(unique_labels.size());
    if (class_count < 2) throw std::invalid_argument("knn: need at least 2 classes");
    std::vector<int> compact(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i)
        compact[static_cast<std::size_t>(i)] = static_cast<int>(
            std::lower_bound(unique_labels.begin(), unique_labels.end(), labels[static_cast<std::size_t>(i)]) -
            unique_labels.begin());

    const std::vector<int> rank = canonical_ranks(dm.values);

    // Stratified folds: members of each class in canonical order, fold ids
    // from a seeded permutation.
    std::vector<std::vector<int>> members(static_cast<std::size_t>(class_count));
    for (int i = 0; i < count; ++i) members[static_cast<std::size_t>(compact[static_cast<std::size_t>(i)])].push_back(i);
    std::vector<int> fold(static_cast<std::size_t>(count), -1);
    for (int c = 0; c < class_count; ++c) {
        auto& group = members[static_cast<std::size_t>(c)];
        if (static_cast<int>(group.size()) < config.folds)
            throw std::invalid_argument("knn: class " + std::to_string(unique_labels[static_cast<std::size_t>(c)]) +
                                        " has fewer members (" + std::to_string(group.size()) +
                                        ") than folds (" + std::to_string(config.folds) + ")");
        std::sort(group.begin(), group.end(), [&](int a, int b) {
            return rank[static_cast<std::size_t>(a)] < rank[static_cast<std::size_t>(b)];
        });
        std::vector<int> slots(group.size());
        std::iota(slots.begin(), slots.end(), 0);
        Rng rng(derive_seed(config.seed, static_cast<std::uint64_t>(c)));
        rng.shuffle(slots);
        for (std::size_t i = 0; i < group.size(); ++i)
            fold[static_cast<std::size_t>(group[i])] = slots[i] % config.folds;
    }

    ClassificationReport report;
    report.fold_assignment = fold;
    report.test_confusion_total = Eigen::MatrixXi::Zero(class_count, class_count);
    for (int f = 0; f < config.folds; ++f) {
        std::vector<int> train, test;
        for (int i = 0; i < count; ++i)
            (fold[static_cast<std::size_t>(i)] == f ? test : train).push_back(i);

        Eigen::MatrixXi test_confusion = Eigen::MatrixXi::Zero(class_count, class_count);
        for (int point : test) {
            const int predicted = classify_point(dm.values, rank, compact, point, train,
                                                 config.k_neighbors, class_count);
            ++test_confusion(compact[static_cast<std::size_t>(point)], predicted);
        }
        Eigen::MatrixXi train_confusion = Eigen::MatrixXi::Zero(class_count, class_count);
        for (int point : train) {
            const int predicted = classify_point(dm.values, rank, compact, point, train,
                                                 config.k_neighbors, class_count);
            ++train_confusion(compact[static_cast<std::size_t>(point)], predicted);
        }
        report.test_folds.push_back(metrics_from_confusion(test_confusion));
        report.train_folds.push_back(metrics_from_confusion(train_confusion));
        report.test_confusion.push_back(test_confusion);
        report.test_confusion_total += test_confusion;
    }

    auto mean_of = [&](const std::vector<FoldMetrics>& folds) {
        FoldMetrics mean;
        for (const auto& m : folds) {
            mean.recall += m.recall;
            mean.precision += m.precision;
            mean.accuracy += m.accuracy;
        }
        const double n = static_cast<double>(folds.size());
        mean.recall /= n;
        mean.precision /= n;
        mean.accuracy /= n;
        return mean;
    };
    report.train_mean = mean_of(report.train_folds);
    report.test_mean = mean_of(report.test_folds);
    return report;
}

}  // namespace nbd
