#include <cmath>
#include <numeric>

#include "doctest.h"
#include "nbd/experiments.hpp"
#include "nbd/rng.hpp"

using namespace nbd;

namespace {

DistanceMatrix matrix_from(const std::vector<std::vector<double>>& rows) {
    DistanceMatrix dm;
    const int n = static_cast<int>(rows.size());
    dm.values = Eigen::MatrixXd(n, n);
    for (int i = 0; i < n; ++i) {
        dm.labels.push_back("p" + std::to_string(i));
        for (int j = 0; j < n; ++j) dm.values(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    return dm;
}

// two perfectly separated classes: intra 0, inter 1
DistanceMatrix separated_matrix(int per_class) {
    const int n = 2 * per_class;
    std::vector<std::vector<double>> rows(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            rows[i][j] = (i < per_class) == (j < per_class) ? 0.0 : 1.0;
    return matrix_from(rows);
}

}  // namespace

TEST_CASE("pca of identical vectors projects to zero") {
    std::vector<std::vector<double>> vs(4, {1.0, 2.0, 3.0});
    PcaResult pca = pca_project(vs, 2);
    CHECK(pca.projected.cwiseAbs().maxCoeff() == doctest::Approx(0.0));
    CHECK(pca.variances.cwiseAbs().maxCoeff() == doctest::Approx(0.0));
}

TEST_CASE("pca of collinear 2d points concentrates variance on one axis") {
    std::vector<std::vector<double>> vs;
    for (double x : {-2.0, -1.0, 0.0, 1.0, 2.0}) vs.push_back({x, 2.0 * x});
    PcaResult pca = pca_project(vs, 2);
    CHECK(pca.variances(0) > 0.0);
    CHECK(pca.variances(1) == doctest::Approx(0.0));
    // second axis is zero-filled past the rank
    CHECK(pca.components.row(1).cwiseAbs().maxCoeff() == 0.0);
    // first axis is the unit vector along (1, 2)
    CHECK(pca.components(0, 0) == doctest::Approx(1.0 / std::sqrt(5.0)));
    CHECK(pca.components(0, 1) == doctest::Approx(2.0 / std::sqrt(5.0)));
}

TEST_CASE("full-rank pca preserves pairwise distances") {
    Rng rng(1);
    std::vector<std::vector<double>> vs;
    for (int i = 0; i < 8; ++i) {
        std::vector<double> v(5);
        for (double& x : v) x = rng.next_double();
        vs.push_back(v);
    }
    PcaResult pca = pca_project(vs, 5);
    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j) {
            double direct = 0.0;
            for (int d = 0; d < 5; ++d) {
                const double diff = vs[static_cast<std::size_t>(i)][static_cast<std::size_t>(d)] -
                                    vs[static_cast<std::size_t>(j)][static_cast<std::size_t>(d)];
                direct += diff * diff;
            }
            const double projected = (pca.projected.row(i) - pca.projected.row(j)).squaredNorm();
            CHECK(projected == doctest::Approx(direct).epsilon(1e-9));
        }
}

TEST_CASE("pca axes are orthonormal") {
    Rng rng(2);
    std::vector<std::vector<double>> vs;
    for (int i = 0; i < 12; ++i) {
        std::vector<double> v(6);
        for (double& x : v) x = rng.next_double();
        vs.push_back(v);
    }
    PcaResult pca = pca_project(vs, 4);
    const Eigen::MatrixXd gram = pca.components * pca.components.transpose();
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            CHECK(std::abs(gram(i, j) - (i == j ? 1.0 : 0.0)) <= 1e-10);
}

TEST_CASE("gram-route pca (dimension > sample count) is exact on the data span") {
    // 3 centered points span at most 2 dimensions, so dims=2 loses nothing and
    // projected pairwise distances must match the originals exactly
    std::vector<std::vector<double>> wide = {{1, 0, 0, 2, 1}, {0, 1, 1, 0, 3}, {2, 2, 0, 1, 0}};
    PcaResult a = pca_project(wide, 2);
    CHECK(a.variances(0) >= a.variances(1));
    const Eigen::MatrixXd gram = a.components * a.components.transpose();
    CHECK((gram - Eigen::MatrixXd::Identity(2, 2)).cwiseAbs().maxCoeff() <= 1e-10);
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            double direct = 0.0;
            for (int d = 0; d < 5; ++d) {
                const double diff = wide[static_cast<std::size_t>(i)][static_cast<std::size_t>(d)] -
                                    wide[static_cast<std::size_t>(j)][static_cast<std::size_t>(d)];
                direct += diff * diff;
            }
            CHECK((a.projected.row(i) - a.projected.row(j)).squaredNorm() ==
                  doctest::Approx(direct).epsilon(1e-9));
        }
}

TEST_CASE("pca validates dims") {
    std::vector<std::vector<double>> vs = {{1.0, 2.0}};
    CHECK_THROWS_AS(pca_project(vs, 3), std::invalid_argument);
    CHECK_THROWS_AS(pca_project({}, 1), std::invalid_argument);
}

TEST_CASE("knn on perfectly separated classes is perfect") {
    DistanceMatrix dm = separated_matrix(6);
    std::vector<int> labels(12, 0);
    std::fill(labels.begin() + 6, labels.end(), 1);
    KnnConfig config;
    config.k_neighbors = 3;
    config.folds = 3;
    config.seed = 5;
    ClassificationReport report = knn_classify(dm, labels, config);
    CHECK(report.test_mean.accuracy == doctest::Approx(1.0));
    CHECK(report.test_mean.precision == doctest::Approx(1.0));
    CHECK(report.test_mean.recall == doctest::Approx(1.0));
    CHECK(report.train_mean.accuracy == doctest::Approx(1.0));
    CHECK(report.test_confusion_total.diagonal().sum() == 12);
}

TEST_CASE("knn accuracy is at chance level for shuffled labels") {
    // chance-level oracle by simulation: random symmetric distances, random
    // balanced labels, mean accuracy over 20 seeds near 1/2
    double total = 0.0;
    int runs = 0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Rng rng(900 + seed);
        const int n = 24;
        std::vector<std::vector<double>> rows(n, std::vector<double>(n, 0.0));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) rows[i][j] = rows[j][i] = 0.5 + rng.next_double();
        std::vector<int> labels(n, 0);
        std::fill(labels.begin() + n / 2, labels.end(), 1);
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        rng.shuffle(order);
        std::vector<int> shuffled(n);
        for (int i = 0; i < n; ++i) shuffled[static_cast<std::size_t>(i)] = labels[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])];
        KnnConfig config;
        config.k_neighbors = 3;
        config.folds = 4;
        config.seed = seed;
        total += knn_classify(matrix_from(rows), shuffled, config).test_mean.accuracy;
        ++runs;
    }
    const double mean_accuracy = total / runs;
    CHECK(mean_accuracy > 0.3);
    CHECK(mean_accuracy < 0.7);
}

TEST_CASE("knn is deterministic and permutation invariant") {
    Rng rng(77);
    const int n = 20;
    std::vector<std::vector<double>> rows(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) rows[i][j] = rows[j][i] = 0.1 + rng.next_double();
    std::vector<int> labels(n, 0);
    std::fill(labels.begin() + n / 2, labels.end(), 1);
    KnnConfig config;
    config.k_neighbors = 5;
    config.folds = 5;
    config.seed = 123;
    DistanceMatrix dm = matrix_from(rows);
    ClassificationReport first = knn_classify(dm, labels, config);
    ClassificationReport second = knn_classify(dm, labels, config);
    CHECK(first.fold_assignment == second.fold_assignment);
    CHECK(first.test_mean.accuracy == second.test_mean.accuracy);

    // jointly permute matrix and labels: metrics must not move
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    rng.shuffle(perm);
    std::vector<std::vector<double>> permuted_rows(n, std::vector<double>(n, 0.0));
    std::vector<int> permuted_labels(n);
    for (int i = 0; i < n; ++i) {
        permuted_labels[static_cast<std::size_t>(i)] = labels[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
        for (int j = 0; j < n; ++j)
            permuted_rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                rows[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])][static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])];
    }
    ClassificationReport permuted = knn_classify(matrix_from(permuted_rows), permuted_labels, config);
    CHECK(permuted.test_mean.accuracy == first.test_mean.accuracy);
    CHECK(permuted.test_mean.precision == first.test_mean.precision);
    CHECK(permuted.test_mean.recall == first.test_mean.recall);
    CHECK(permuted.train_mean.accuracy == first.train_mean.accuracy);
}

TEST_CASE("knn validates its configuration") {
    DistanceMatrix dm = separated_matrix(3);
    std::vector<int> labels = {0, 0, 0, 1, 1, 1};
    KnnConfig config;
    config.folds = 4;  // class size 3 < folds
    CHECK_THROWS_AS(knn_classify(dm, labels, config), std::invalid_argument);
    config.folds = 2;
    config.k_neighbors = 0;
    CHECK_THROWS_AS(knn_classify(dm, labels, config), std::invalid_argument);
    config.k_neighbors = 1;
    CHECK_THROWS_AS(knn_classify(dm, std::vector<int>(6, 0), config), std::invalid_argument);
}

TEST_CASE("synthetic dataset draws the configured classes") {
    DatasetConfig config;
    config.seed = 4;
    config.size_mean = 30.0;
    config.size_sigma = 2.0;
    config.min_size = 25;
    ClassSpec er{"er", {}, 3};
    er.model.family = ModelFamily::er;
    er.model.p = 0.2;
    ClassSpec ba{"ba", {}, 3};
    ba.model.family = ModelFamily::ba;
    ba.model.m_attach = 2;
    config.classes = {er, ba};
    LabeledDataset ds = make_synthetic_dataset(config);
    REQUIRE(ds.graphs.size() == 6);
    CHECK(ds.labels == std::vector<int>{0, 0, 0, 1, 1, 1});
    CHECK(ds.names[0] == "er_0");
    CHECK(ds.class_names == std::vector<std::string>{"er", "ba"});
    for (const Graph& g : ds.graphs) CHECK(g.vertex_count() >= 25);
    // determinism
    LabeledDataset again = make_synthetic_dataset(config);
    for (std::size_t i = 0; i < ds.graphs.size(); ++i) CHECK(ds.graphs[i] == again.graphs[i]);
}

TEST_CASE("size sensitivity rescales the largest size to one") {
    SizeSweepConfig config;
    config.model.family = ModelFamily::er;
    config.model.p = 0.3;
    config.n_values = {30, 40};
    config.samples = 3;
    config.reference_n = 30;
    config.seed = 8;
    SizeSensitivityReport report = size_sensitivity(config);
    REQUIRE(report.n_values == std::vector<int>{30, 40});
    CHECK(report.mean_rescaled[1] == doctest::Approx(1.0));
    CHECK(report.rescale_constant > 0.0);
    CHECK(report.mean_distance[0] > 0.0);
    // deterministic across calls and thread counts
    config.threads = 4;
    SizeSensitivityReport parallel = size_sensitivity(config);
    CHECK(parallel.mean_distance == report.mean_distance);
}

TEST_CASE("size sensitivity shares graphs across methods") {
    SizeSweepConfig config;
    config.model.family = ModelFamily::er;
    config.model.p = 0.3;
    config.n_values = {25, 35};
    config.samples = 2;
    config.reference_n = 25;
    config.seed = 9;
    MethodConfig dn, nb, lap;
    dn.method = DistanceMethod::dnbd;
    nb.method = DistanceMethod::nbd;
    nb.trunc_k = 10;
    lap.method = DistanceMethod::laplacian;
    lap.trunc_k = 10;
    auto reports = size_sensitivity_multi(config, {dn, nb, lap});
    REQUIRE(reports.size() == 3);
    // single-method runs see the same graphs, hence identical numbers
    config.method = nb;
    CHECK(size_sensitivity(config).mean_distance == reports[1].mean_distance);
    config.method = lap;
    CHECK(size_sensitivity(config).mean_distance == reports[2].mean_distance);
}

TEST_CASE("deterministic generators make the self-distance zero") {
    ModelSpec spec;
    spec.family = ModelFamily::er;
    spec.n = 40;
    spec.p = 0.25;
    spec.seed = 77;
    const Graph a = generate(spec);
    const Graph b = generate(spec);
    CHECK(dnbd(SpectralCdf::from_graph(a), SpectralCdf::from_graph(b), 100) == 0.0);
}

TEST_CASE("ws manifold single cell with one sample projects to zero") {
    WsManifoldConfig config;
    config.n = 12;
    config.p_values = {0.1};
    config.k_values = {4};
    config.samples = 1;
    config.embed_k = 5;
    config.seed = 1;
    WsManifoldResult result = ws_manifold(config);
    REQUIRE(result.cells.size() == 1);
    for (double x : result.cells[0].projection) CHECK(x == doctest::Approx(0.0));
}

TEST_CASE("ws manifold: p=0 and p=1 coincide at k=n-1") {
    WsManifoldConfig config;
    config.n = 16;
    config.p_values = {0.0, 1.0};
    config.k_values = {15};
    config.samples = 1;
    config.embed_k = 6;
    config.seed = 3;
    WsManifoldResult result = ws_manifold(config);
    REQUIRE(result.cells.size() == 2);
    REQUIRE(result.mean_embeddings.size() == 2);
    for (std::size_t i = 0; i < result.mean_embeddings[0].size(); ++i)
        CHECK(std::abs(result.mean_embeddings[0][i] - result.mean_embeddings[1][i]) <= 1e-9);
}

TEST_CASE("ws manifold embedding dimension is embed_k squared") {
    WsManifoldConfig config;
    config.n = 10;
    config.p_values = {0.2};
    config.k_values = {2, 4};
    config.samples = 2;
    config.embed_k = 7;
    config.seed = 6;
    WsManifoldResult result = ws_manifold(config);
    for (const auto& v : result.mean_embeddings) CHECK(v.size() == 49);
}
