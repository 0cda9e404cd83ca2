#include "nbd/spectral_distance.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "nbd/nb_matrix.hpp"
#include "nbd/parallel.hpp"

namespace nbd {

namespace {

// Inclusive-boundary bin index: the first grid value >= x, where the grid is
// value(i) = (i + offset) / cells (offset 0.5 for midpoints, 0 for nodes).
// The slack absorbs eigensolver noise so a point computed a few ulps above an
// exact boundary still counts as on it.
constexpr double kBinSlack = 1e-9;

int bin_index(double x, int cells, double offset) {
    double idx = std::ceil(x * cells - offset - kBinSlack);
    return idx < 0.0 ? 0 : static_cast<int>(idx);
}

// (r_bin, theta_bin) per stored point for a `cells`-cell grid; bins >= cells
// mean the point is never counted on this grid (it sits past the last sample
// coordinate, e.g. magnitude 1 under the midpoint rule).
std::vector<std::pair<int, int>> grid_bins(const RescaledSpectrum& spectrum, int cells,
                                           double offset) {
    std::vector<std::pair<int, int>> bins;
    bins.reserve(spectrum.points.size());
    for (const auto& pt : spectrum.points)
        bins.emplace_back(bin_index(pt.magnitude, cells, offset),
                          bin_index(pt.argument / M_PI, cells, offset));
    std::sort(bins.begin(), bins.end());
    return bins;
}

double dnbd_from_sq_sum(double sq_sum, int resolution) {
    // cell area = (1/R) * (pi/R); distance = (1/pi) * sqrt(integral)
    const double cell = M_PI / (static_cast<double>(resolution) * resolution);
    return std::sqrt(sq_sum * cell) / M_PI;
}

}  // namespace

SpectralCdf SpectralCdf::from_rescaled(RescaledSpectrum spectrum, CdfNormalization norm) {
    SpectralCdf cdf;
    cdf.denominator_ = norm == CdfNormalization::full_spectrum
                           ? spectrum.total_count
                           : static_cast<int>(spectrum.points.size());
    cdf.spectrum_ = std::move(spectrum);
    return cdf;
}

SpectralCdf SpectralCdf::from_graph(const Graph& g, CdfNormalization norm) {
    const Graph core = g.two_core();
    if (core.vertex_count() == 0) return SpectralCdf{};  // F = 0 by convention
    return from_rescaled(rescale_spectrum(eigenvalues_of(reduced_nb_matrix(core))), norm);
}

double SpectralCdf::query(double r, double theta) const {
    if (denominator_ == 0) return 0.0;
    int count = 0;
    for (const auto& pt : spectrum_.points)
        if (pt.magnitude <= r && pt.argument <= theta) ++count;
    return static_cast<double>(count) / denominator_;
}

std::vector<double> SpectralCdf::midpoint_grid(int resolution) const {
    if (resolution < 1) throw std::invalid_argument("midpoint_grid: resolution must be >= 1");
    const int R = resolution;
    std::vector<double> out(static_cast<std::size_t>(R) * R, 0.0);
    if (denominator_ == 0) return out;
    const auto bins = grid_bins(spectrum_, R, 0.5);
    const double den = denominator_;
    std::vector<int> hist(R, 0);
    std::size_t next = 0;
    for (int i = 0; i < R; ++i) {
        while (next < bins.size() && bins[next].first <= i) {
            if (bins[next].second < R) ++hist[bins[next].second];
            ++next;
        }
        int cum = 0;
        for (int j = 0; j < R; ++j) {
            cum += hist[j];
            out[static_cast<std::size_t>(i) * R + j] = cum / den;
        }
    }
    return out;
}

std::vector<double> SpectralCdf::node_grid(int k) const {
    if (k < 2) throw std::invalid_argument("node_grid: k must be >= 2");
    std::vector<double> out(static_cast<std::size_t>(k) * k, 0.0);
    if (denominator_ == 0) return out;
    const auto bins = grid_bins(spectrum_, k - 1, 0.0);
    const double den = denominator_;
    // bins range over 0..k-1 here: a point at magnitude 1 lands on the last
    // node rather than falling off the grid.
    std::vector<int> hist(k, 0);
    std::size_t next = 0;
    for (int i = 0; i < k; ++i) {
        while (next < bins.size() && bins[next].first <= i) {
            ++hist[std::min(bins[next].second, k - 1)];
            ++next;
        }
        int cum = 0;
        for (int j = 0; j < k; ++j) {
            cum += hist[j];
            out[static_cast<std::size_t>(j) * k + i] = cum / den;  // theta-major
        }
    }
    return out;
}

double dnbd(const SpectralCdf& f1, const SpectralCdf& f2, int resolution) {
    if (resolution < 2) throw std::invalid_argument("dnbd: resolution must be >= 2");
    const int R = resolution;
    const auto bins1 = grid_bins(f1.rescaled(), R, 0.5);
    const auto bins2 = grid_bins(f2.rescaled(), R, 0.5);
    const double den1 = f1.denominator(), den2 = f2.denominator();
    std::vector<int> hist1(R, 0), hist2(R, 0);
    std::size_t next1 = 0, next2 = 0;
    double sq_sum = 0.0;
    for (int i = 0; i < R; ++i) {
        while (next1 < bins1.size() && bins1[next1].first <= i) {
            if (bins1[next1].second < R) ++hist1[bins1[next1].second];
            ++next1;
        }
        while (next2 < bins2.size() && bins2[next2].first <= i) {
            if (bins2[next2].second < R) ++hist2[bins2[next2].second];
            ++next2;
        }
        int cum1 = 0, cum2 = 0;
        for (int j = 0; j < R; ++j) {
            cum1 += hist1[j];
            cum2 += hist2[j];
            const double a = den1 > 0.0 ? cum1 / den1 : 0.0;
            const double b = den2 > 0.0 ? cum2 / den2 : 0.0;
            sq_sum += (a - b) * (a - b);
        }
    }
    return dnbd_from_sq_sum(sq_sum, R);
}

std::vector<double> embed(const SpectralCdf& f, int k) {
    if (k < 2) throw std::invalid_argument("embed: k must be >= 2");
    return f.node_grid(k);
}

DistanceMatrix pairwise_distances(const std::vector<Graph>& graphs,
                                  const std::vector<std::string>& labels, int resolution,
                                  int threads) {
    if (graphs.empty()) throw std::invalid_argument("pairwise_distances: no graphs");
    const int count = static_cast<int>(graphs.size());
    DistanceMatrix dm;
    if (labels.empty()) {
        dm.labels.reserve(graphs.size());
        for (int i = 0; i < count; ++i) dm.labels.push_back("g" + std::to_string(i));
    } else if (labels.size() == graphs.size()) {
        dm.labels = labels;
    } else {
        throw std::invalid_argument("pairwise_distances: label count mismatch");
    }

    std::vector<std::vector<double>> grids(graphs.size());
    parallel_for(count, threads, [&](int i) {
        try {
            grids[i] = SpectralCdf::from_graph(graphs[i]).midpoint_grid(resolution);
        } catch (const std::exception& e) {
            throw std::runtime_error(dm.labels[i] + ": " + e.what());
        }
    });

    dm.values = Eigen::MatrixXd::Zero(count, count);
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < count; ++i)
        for (int j = i + 1; j < count; ++j) pairs.emplace_back(i, j);
    parallel_for(static_cast<int>(pairs.size()), threads, [&](int p) {
        auto [i, j] = pairs[p];
        const auto& a = grids[i];
        const auto& b = grids[j];
        double sq_sum = 0.0;
        for (std::size_t idx = 0; idx < a.size(); ++idx) {
            const double diff = a[idx] - b[idx];
            sq_sum += diff * diff;
        }
        const double d = dnbd_from_sq_sum(sq_sum, resolution);
        dm.values(i, j) = d;
        dm.values(j, i) = d;
    });
    return dm;
}

void write_distance_csv(const DistanceMatrix& dm, std::ostream& out) {
    out << "label";
    for (const auto& label : dm.labels) out << "," << label;
    out << "\n";
    out.precision(17);
    for (Eigen::Index i = 0; i < dm.values.rows(); ++i) {
        out << dm.labels[static_cast<std::size_t>(i)];
        for (Eigen::Index j = 0; j < dm.values.cols(); ++j) out << "," << dm.values(i, j);
        out << "\n";
    }
}

}  // namespace nbd
