#ifndef NBD_EXPERIMENTS_HPP
#define NBD_EXPERIMENTS_HPP

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "nbd/generators.hpp"
#include "nbd/graph.hpp"
#include "nbd/methods.hpp"

namespace nbd {

// ---------------------------------------------------------------------------
// Datasets

struct LabeledDataset {
    std::vector<Graph> graphs;
    std::vector<int> labels;  // class ids 0..C-1
    std::vector<std::string> names;
    std::vector<std::string> class_names;
};

/// One synthetic class: `count` draws from `model` with per-graph sizes
/// round(Normal(size_mean, size_sigma)) clamped to >= min_size.
struct ClassSpec {
    std::string name;
    ModelSpec model;  // n and seed are overridden per draw
    int count = 0;
};

struct DatasetConfig {
    std::vector<ClassSpec> classes;
    double size_mean = 200.0;
    double size_sigma = 6.324555320336759;  // sqrt(40)
    int min_size = 50;
    std::uint64_t seed = 0;
};

LabeledDataset make_synthetic_dataset(const DatasetConfig& config);

// ---------------------------------------------------------------------------
// Size sensitivity

struct SizeSweepConfig {
    ModelSpec model;  // family and parameters; n and seed overridden
    std::vector<int> n_values;
    int samples = 20;
    int reference_n = 100;
    MethodConfig method;
    std::uint64_t seed = 0;
    int threads = 1;
};

struct SizeSensitivityReport {
    std::vector<int> n_values;
    std::vector<double> mean_distance;
    std::vector<double> std_distance;
    std::vector<double> mean_rescaled;  // mean at max(n) equals 1 by construction
    std::vector<double> std_rescaled;
    double rescale_constant = 0.0;  // mean distance at max(n)
};

/// Draws one reference graph at reference_n and `samples` graphs per n, then
/// reports per-n mean/std distances to the reference, rescaled by the mean at
/// max(n). Sample graphs depend only on (seed, n, sample index), never on the
/// method, so sweeps under different methods see identical graphs.
SizeSensitivityReport size_sensitivity(const SizeSweepConfig& config);

/// Several methods over one set of graphs, computing each spectrum once.
std::vector<SizeSensitivityReport> size_sensitivity_multi(
    const SizeSweepConfig& config, const std::vector<MethodConfig>& methods);

// ---------------------------------------------------------------------------
// PCA

struct PcaResult {
    Eigen::MatrixXd components;   // dims x D, orthonormal rows (zero rows past the rank)
    Eigen::MatrixXd projected;    // N x dims
    Eigen::VectorXd variances;    // dims, descending
};

/// Principal components of the sample covariance via symmetric
/// eigendecomposition. Deterministic sign convention: the first component of
/// each axis with magnitude above 1e-12 is positive. Axes beyond the data
/// rank are zero-filled.
PcaResult pca_project(const std::vector<std::vector<double>>& vectors, int dims);

// ---------------------------------------------------------------------------
// Watts-Strogatz manifold

struct WsManifoldConfig {
    int n = 200;
    std::vector<double> p_values;
    std::vector<int> k_values;
    int samples = 100;
    int embed_k = 100;
    std::uint64_t seed = 0;
    int threads = 1;
};

struct WsManifoldCell {
    double p = 0.0;
    int k = 0;
    std::array<double, 3> projection{};
};

struct WsManifoldResult {
    std::vector<WsManifoldCell> cells;  // p-major, k-minor order
    std::vector<std::vector<double>> mean_embeddings;  // parallel to cells
};

/// Mean spectral embedding per (p, k) cell, PCA-projected to three
/// dimensions.
WsManifoldResult ws_manifold(const WsManifoldConfig& config);

// ---------------------------------------------------------------------------
// kNN classification

struct KnnConfig {
    int k_neighbors = 10;
    int folds = 10;
    std::uint64_t seed = 0;
};

struct FoldMetrics {
    double recall = 0.0;     // macro-averaged over classes
    double precision = 0.0;  // macro-averaged over classes
    double accuracy = 0.0;
};

struct ClassificationReport {
    std::vector<FoldMetrics> train_folds;
    std::vector<FoldMetrics> test_folds;
    FoldMetrics train_mean;
    FoldMetrics test_mean;
    std::vector<Eigen::MatrixXi> test_confusion;  // per fold, rows = true class
    Eigen::MatrixXi test_confusion_total;
    std::vector<int> fold_assignment;
};

/// Stratified k-fold kNN over a precomputed distance matrix. Majority vote
/// among the k nearest training points; ties broken by smaller summed
/// distance, then smaller class id. Train metrics are leave-self-out within
/// the training partition. Fold assignment is a pure function of (labels,
/// folds, seed) and of the points' distance profiles, so jointly permuting
/// the matrix and labels leaves the report unchanged.
ClassificationReport knn_classify(const DistanceMatrix& dm, const std::vector<int>& labels,
                                  const KnnConfig& config);

}  // namespace nbd

#endif  // NBD_EXPERIMENTS_HPP
